#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "einstein_cyl/classify.hpp"
#include "einstein_cyl/curvature.hpp"
#include "einstein_cyl/reparam.hpp"
#include "support/taxonomy.hpp"

using namespace ecyl;

namespace {

ModelParams P(int a, double C, double lambda) { return {branch_from_int(a), C, lambda}; }

bool has_note(const ClassificationRecord& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

void check_invariants(const ClassificationRecord& r) {
  if (r.smooth) CHECK(r.complete);
  if (r.orbifold_n) {
    CHECK(r.complete);
    CHECK_FALSE(r.smooth);
    CHECK(*r.orbifold_n >= 2);
  }
}

}  // namespace

TEST_CASE("four-sphere") {
  const auto recs = classify_case(P(1, 0, 3));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].complete);
  CHECK(recs[0].smooth);
  CHECK(recs[0].label == std::string("S^4 (round)"));
  CHECK(recs[0].case_id == "5.2");
}

TEST_CASE("no complete metric at a = 0, lambda = 6, C < 0") {
  for (double C : {-0.01, -0.1, -0.5, -1.0}) {
    for (const auto& r : classify_case(P(0, C, 6))) CHECK_FALSE(r.complete);
  }
}

TEST_CASE("a = -1, C = 1, lambda = -2 is incomplete on both intervals") {
  const auto recs = classify_case(P(-1, 1, -2));
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) CHECK_FALSE(r.complete);
}

TEST_CASE("hyperbolic space on both intervals") {
  const auto recs = classify_case(P(-1, 0, -3));
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) {
    CHECK(r.smooth);
    CHECK(r.label == std::string("H^4 (real hyperbolic)"));
  }
}

TEST_CASE("Page and Fubini-Study") {
  const auto page = classify_case(P(1, 0, page_roots().lambda));
  REQUIRE(page.size() == 1);
  CHECK(page[0].smooth);
  CHECK(std::isfinite(page[0].endpoints[1].t));
  CHECK(page[0].label == std::string("CP^2 # -CP^2 (Page)"));

  const auto fs = classify_case(P(0, 0, 6));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].smooth);
  CHECK(fs[0].label == std::string("CP^2 (Fubini-Study)"));
}

TEST_CASE("taxonomy regression") {
  for (const auto& row : taxonomy::rows()) {
    CAPTURE(row.case_id);
    CAPTURE(row.params.C);
    CAPTURE(row.params.lambda);
    const auto recs = classify_case(row.params);
    REQUIRE(recs.size() == row.records.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(recs[i].case_id == row.case_id);
      CHECK(recs[i].complete == row.records[i].complete);
      CHECK(recs[i].smooth == row.records[i].smooth);
      CHECK(recs[i].orbifold_n.value_or(0) == row.records[i].n);
      check_invariants(recs[i]);
    }
  }
}

TEST_CASE("normalization is recorded") {
  const auto flipped = classify_case(P(1, -3, 2));
  REQUIRE_FALSE(flipped.empty());
  CHECK(has_note(flipped[0], "s -> 1/s"));
  CHECK(flipped[0].params.C == 3.0);
  CHECK(flipped[0].input.C == -3.0);

  const auto scaled = classify_case(P(0, -2.0 / 16, -24));
  REQUIRE(scaled.size() == 1);
  CHECK(scaled[0].params.lambda == -6.0);
  REQUIRE(scaled[0].input_interval);
  REQUIRE(scaled[0].s_interval);
  CHECK(scaled[0].input_interval->lo == doctest::Approx(scaled[0].s_interval->lo / 2));
}

TEST_CASE("no positivity interval") {
  const auto recs = classify_case(P(1, 0, 5));
  REQUIRE(recs.size() == 1);
  CHECK_FALSE(recs[0].s_interval);
  CHECK_FALSE(recs[0].complete);
  CHECK_FALSE(recs[0].notes.empty());
}

TEST_CASE("sweep examples") {
  const auto one = sweep(GridSpec{{1}, {0.0}, {3.0}, {}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].smooth);

  GridSpec c24;
  for (double l : {-3.0, -2.0, -1.0, 0.0}) c24.points.push_back(P(-1, (24 + 8 * l) / 3, l));
  const auto fam = sweep(c24);
  int smooth = 0;
  for (const auto& r : fam) smooth += r.smooth;
  CHECK(smooth >= 4);
  for (const auto& r : fam) {
    if (r.s_interval && r.s_interval->lo == 0.0) CHECK(r.smooth);
  }

  GridSpec orb;
  for (int n : {3, 4, 5}) orb.points.push_back(P(0, -orbifold_D(n), -6));
  const auto orbs = sweep(orb);
  REQUIRE(orbs.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(orbs[i].complete);
    CHECK(orbs[i].orbifold_n == 3 + i);
  }
}

TEST_CASE("sweep order is deterministic") {
  GridSpec g{{-1, 0, 1}, {-2.0, 0.0, 5.0}, {-3.0, 1.0, 4.0}, {P(1, 0, 3)}};
  const auto a = sweep(g, 1);
  const auto b = sweep(g, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].input == b[i].input);
    CHECK(a[i].complete == b[i].complete);
    CHECK(a[i].s_interval == b[i].s_interval);
  }
  // Product grid ordering: a, then C, then lambda.
  CHECK(a.front().input.a == Branch::Minus);
  CHECK(a.back().input == P(1, 0, 3));
}

TEST_CASE("complete records are Einstein on their profiles") {
  for (const auto& row : taxonomy::rows()) {
    for (const auto& r : classify_case(row.params)) {
      if (!r.complete || !r.s_interval) continue;
      const auto g = sample_profile(r.params, *r.s_interval, 60);
      CHECK(einstein_residual(r.params, g.samples) < 1e-7);
    }
  }
}
