#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "einstein_cyl/families.hpp"
#include "einstein_cyl/roots.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

// What sits at one end of a maximal interval where f^2 > 0.
enum class EndKind {
  Zero,          // s -> 0
  SimpleRoot,    // simple positive root of the radicand
  MultipleRoot,  // root of multiplicity >= 2
  Pole,          // s = 1 with a = -1
  Infinity,      // s -> inf
};

std::string_view to_string(EndKind kind);

struct IntervalEnd {
  double s = 0.0;
  EndKind kind = EndKind::Zero;
  int multiplicity = 0;
  std::optional<RootFactor> factor;  // set for root ends
};

struct PositivityInterval {
  SInterval s;
  IntervalEnd lo;
  IntervalEnd hi;
};

// Maximal open s-intervals on which f^2 > 0 (and s^2 + a != 0), ascending.
std::vector<PositivityInterval> positivity_intervals(const ModelParams& params,
                                                     const RootOptions& options = {});

// The maximal interval whose closure contains [s0, s1], ends matched to a
// relative 1e-12.
std::optional<PositivityInterval> interval_containing(const ModelParams& params, double s0, double s1);

// The maximal interval equal to `s` up to a relative tolerance on finite ends.
std::optional<PositivityInterval> match_interval(const ModelParams& params, const SInterval& s,
                                                 double rel_tol = 1e-9);

// Whether t stays finite as s approaches the end, from the order of the
// singularity of dt/ds there: simple roots, s = 0 and (a = +-1) s = inf are
// integrable, the pole and multiple roots are not, nor is s = inf for a = 0.
bool t_finite(const ModelParams& params, const IntervalEnd& end);

}  // namespace ecyl
