#include <doctest.h>

#include <set>

#include "newtcut/zeta.hpp"
#include "test_util.hpp"

using namespace newtcut;
using namespace testutil;

namespace {

std::set<Rat> value_set(const PoleSet& ps) { return {ps.values.begin(), ps.values.end()}; }

}  // namespace

TEST_CASE("candidate pole sets of the examples") {
  CHECK(value_set(candidate_poles(newton_polyhedron(f1()))) ==
        std::set<Rat>{Rat(-1), Rat(-19, 18), Rat(-5, 4), Rat(-2)});
  CHECK(value_set(candidate_poles(newton_polyhedron(f2()))) ==
        std::set<Rat>{Rat(-1), Rat(-3, 2)});
  CHECK(value_set(candidate_poles(newton_polyhedron(f3()))) ==
        std::set<Rat>{Rat(-1), Rat(-3, 2)});
}

TEST_CASE("reduced candidate pole sets") {
  NewtonPolyhedron P1 = newton_polyhedron(f1());
  BChoice c1 = choose_consistent(
      {facet_by_normal(P1, {4, 1, 5}), facet_by_normal(P1, {1, 0, 1})}, P1);
  REQUIRE(c1.ok());
  CHECK(value_set(reduced_candidate_poles(P1, *c1.accepted)) ==
        std::set<Rat>{Rat(-1), Rat(-19, 18)});

  NewtonPolyhedron P3 = newton_polyhedron(f3());
  BChoice c3 = choose_consistent(
      {facet_by_normal(P3, {1, 2, 0}), facet_by_normal(P3, {1, 0, 2})}, P3);
  REQUIRE(c3.ok());
  CHECK(value_set(reduced_candidate_poles(P3, *c3.accepted)) == std::set<Rat>{Rat(-1)});

  // dropping one of the two slope -3/2 facets of f2 keeps the slope alive
  NewtonPolyhedron P2 = newton_polyhedron(f2());
  BChoice c2 = choose_consistent({facet_by_normal(P2, {1, 2, 0})}, P2);
  REQUIRE(c2.ok());
  CHECK(value_set(reduced_candidate_poles(P2, *c2.accepted)) ==
        std::set<Rat>{Rat(-1), Rat(-3, 2)});
}

TEST_CASE("reduced sets are contained in the full sets") {
  std::mt19937 rng(6001);
  for (int inst = 0; inst < 25; ++inst) {
    NewtonPolyhedron P = newton_polyhedron(random_support(rng, 3, 7, 6), 3);
    auto removable = removable_slope_classes(P, RemovableMode::consistent);
    if (removable.empty()) continue;
    const BSet& B = removable.begin()->second;
    PoleSet full = candidate_poles(P);
    PoleSet reduced = reduced_candidate_poles(P, B);
    for (const auto& v : reduced.values)
      CHECK(std::count(full.values.begin(), full.values.end(), v) == 1);
    // equality iff every dropped slope is carried by a retained facet
    bool carried = true;
    for (int k : B.facets) {
      Rat s = facet_slope(P.facets()[k]);
      bool byOther = false;
      for (size_t m = 0; m < P.facets().size(); ++m) {
        if (P.facets()[m].level <= 0) continue;
        if (std::binary_search(B.facets.begin(), B.facets.end(), static_cast<int>(m))) continue;
        if (facet_slope(P.facets()[m]) == s) byOther = true;
      }
      if (!byOther) carried = false;
    }
    CHECK((value_set(full) == value_set(reduced)) == carried);
  }
}

TEST_CASE("removable slope classes of the examples") {
  auto r1 = removable_slope_classes(newton_polyhedron(f1()), RemovableMode::consistent);
  std::set<Rat> s1;
  for (const auto& [slope, bset] : r1) s1.insert(slope);
  CHECK(s1 == std::set<Rat>{Rat(-5, 4), Rat(-2)});

  auto r2 = removable_slope_classes(newton_polyhedron(f2()), RemovableMode::consistent);
  CHECK(r2.empty());

  auto r3 = removable_slope_classes(newton_polyhedron(f3()), RemovableMode::consistent);
  std::set<Rat> s3;
  for (const auto& [slope, bset] : r3) s3.insert(slope);
  CHECK(s3 == std::set<Rat>{Rat(-3, 2)});

  CHECK_THROWS_AS(
      removable_slope_classes(newton_polyhedron(parse_polynomial("x1+x2", 2)),
                              RemovableMode::compatible_n3),
      input_error);
}

TEST_CASE("assembling the known strata of x1^2 + x2 x3") {
  std::vector<Stratum> strata{{1, {{2, 3}}}, {2, {{1, 1}, {2, 3}}}};
  RationalFunctionInS z = assemble_topological_zeta(strata);
  // (s+3) / ((s+1)(2s+3))
  CHECK(z.num.c == std::vector<BigInt>{3, 1});
  CHECK(z.den.c == std::vector<BigInt>{3, 5, 2});
  CHECK(render(z) == "(s+3)/((s+1)(2s+3))");

  PoleExtraction px = actual_poles(z);
  CHECK(px.complete);
  CHECK(px.poles == std::vector<Rat>{Rat(-3, 2), Rat(-1)});
}

TEST_CASE("assembly edge cases") {
  CHECK(assemble_topological_zeta({}).num.zero());
  RationalFunctionInS single = assemble_topological_zeta({{5, {{1, 1}}}});
  CHECK(single.num.c == std::vector<BigInt>{5});
  CHECK(single.den.c == std::vector<BigInt>{1, 1});
  CHECK_THROWS_AS(assemble_topological_zeta({{1, {{0, 0}}}}), input_error);
  CHECK_THROWS_AS(assemble_topological_zeta({{1, {{2, 3}, {2, 3}}}}), input_error);
}

TEST_CASE("actual poles after cancellation") {
  // (s+1) / ((s+1)(2s+3)) reduces before extraction
  IntPoly num{{BigInt(1), BigInt(1)}};
  IntPoly den = ipoly_mul(IntPoly{{BigInt(1), BigInt(1)}}, IntPoly{{BigInt(3), BigInt(2)}});
  RationalFunctionInS z = rf_reduce(num, den);
  PoleExtraction px = actual_poles(z);
  CHECK(px.poles == std::vector<Rat>{Rat(-3, 2)});

  RationalFunctionInS constant = rf_reduce(IntPoly{{BigInt(5)}}, IntPoly{{BigInt(1)}});
  CHECK(actual_poles(constant).poles.empty());
}

TEST_CASE("poles never escape the divisor data") {
  std::mt19937 rng(6002);
  for (int inst = 0; inst < 40; ++inst) {
    std::vector<Stratum> strata;
    std::set<Rat> allowed;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < count; ++s) {
      Stratum st;
      st.chi = static_cast<long long>(rng() % 7) - 3;
      int divisors = 1 + static_cast<int>(rng() % 2);
      std::set<std::pair<long long, long long>> used;
      for (int d = 0; d < divisors; ++d) {
        long long N = 1 + static_cast<long long>(rng() % 3);
        long long nu = 1 + static_cast<long long>(rng() % 4);
        if (!used.insert({N, nu}).second) continue;
        st.divisors.push_back({N, nu});
        allowed.insert(Rat(-nu) / Rat(N));
      }
      strata.push_back(std::move(st));
    }
    RationalFunctionInS z = assemble_topological_zeta(strata);
    PoleExtraction px = actual_poles(z);
    CHECK(px.complete);
    for (const auto& p : px.poles) CHECK(allowed.count(p) == 1);
  }
}

TEST_CASE("assembly is additive") {
  std::vector<Stratum> a{{1, {{2, 3}}}, {-2, {{1, 2}}}};
  std::vector<Stratum> b{{3, {{1, 1}, {2, 3}}}};
  std::vector<Stratum> both = a;
  both.insert(both.end(), b.begin(), b.end());
  CHECK(rf_equal(assemble_topological_zeta(both),
                 rf_add(assemble_topological_zeta(a), assemble_topological_zeta(b))));
}

TEST_CASE("strata consistency for example 2") {
  // actual poles of the assembled zeta equal the full candidate set of f2
  std::vector<Stratum> strata{{1, {{2, 3}}}, {2, {{1, 1}, {2, 3}}}};
  PoleExtraction px = actual_poles(assemble_topological_zeta(strata));
  std::set<Rat> poles(px.poles.begin(), px.poles.end());
  CHECK(poles == value_set(candidate_poles(newton_polyhedron(f2()))));
}
