#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace ecyl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The constant a in f = |h h'| / sqrt(1 - a h^2), after rescaling to {-1, 0, 1}.
enum class Branch : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr int sign_of(Branch a) { return static_cast<int>(a); }
constexpr double value_of(Branch a) { return static_cast<double>(static_cast<int>(a)); }

Branch branch_from_int(int a);
std::string to_string(Branch a);

// (a, C, lambda) selecting one candidate solution.
struct ModelParams {
  Branch a = Branch::Zero;
  double C = 0.0;
  double lambda = 0.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// One point of a profile along the geodesic coordinate t.
//
// s = e^r is the substituted coordinate; it is NaN for profiles that are
// given directly in t and have no s chart attached.
struct ProfileSample {
  double t = 0.0;
  double s = kNaN;
  double f = 0.0;
  double h = 0.0;
  double df_dt = 0.0;
  double dh_dt = 0.0;
  double d2f_dt2 = 0.0;
  double d2h_dt2 = 0.0;
};

// Diagonal Ricci components in the orthonormal frame; ric22 doubles as ric33.
struct RicciDiag {
  double ric00 = 0.0;
  double ric11 = 0.0;
  double ric22 = 0.0;

  double operator[](int i) const { return i == 0 ? ric00 : (i == 1 ? ric11 : ric22); }
};

// Open interval (lo, hi) in s; lo may be 0 and hi may be +inf.
struct SInterval {
  double lo = 0.0;
  double hi = kInf;

  bool contains(double s) const { return s > lo && s < hi; }
  friend bool operator==(const SInterval&, const SInterval&) = default;
};

}  // namespace ecyl
