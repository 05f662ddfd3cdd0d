#include "einstein_cyl/types.hpp"

#include "einstein_cyl/error.hpp"

namespace ecyl {

Branch branch_from_int(int a) {
  switch (a) {
    case -1: return Branch::Minus;
    case 0: return Branch::Zero;
    case 1: return Branch::Plus;
    default: throw Error(ErrorKind::Usage, "branch constant a must be -1, 0 or 1, got " + std::to_string(a));
  }
}

std::string to_string(Branch a) { return std::to_string(sign_of(a)); }

}  // namespace ecyl
