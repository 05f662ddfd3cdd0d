#pragma once

#include <optional>
#include <string>
#include <vector>

#include "einstein_cyl/smoothness.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

struct ClassificationRecord {
  std::string case_id;
  ModelParams params;                    // normalized
  ModelParams input;                     // as given
  std::optional<SInterval> s_interval;   // normalized chart; empty when f^2 <= 0 everywhere
  std::optional<SInterval> input_interval;  // same interval in the input chart
  bool complete = false;
  bool smooth = false;
  std::optional<int> orbifold_n;
  std::optional<std::string> label;
  std::vector<std::string> notes;
  std::vector<EndpointReport> endpoints;
};

// One record per maximal positivity interval of f, decided from the endpoint
// reports: complete when every end is infinite or a collapse of integer order,
// smooth when all those orders are 1. a = +-1 inputs with C < 0 are flipped by
// s -> 1/s first and a = 0 inputs are rescaled to |lambda| in {0, 6}.
std::vector<ClassificationRecord> classify_case(const ModelParams& params);

struct GridSpec {
  std::vector<int> a;
  std::vector<double> C;
  std::vector<double> lambda;
  std::vector<ModelParams> points;  // classified after the product grid
};

// Classifies the product grid (ordered by a, then C, then lambda) and then
// the explicit points. Points run concurrently on at most `threads` workers
// (0: EINSTEIN_CYL_THREADS if set, else hardware concurrency); output order
// does not depend on it.
std::vector<ClassificationRecord> sweep(const GridSpec& grid, unsigned threads = 0);

// Label of the named solution whose parameters match `normalized` within 1e-9.
std::optional<std::string> match_label(const ModelParams& normalized);

}  // namespace ecyl
