#pragma once

#include <map>

#include "newtcut/b1.hpp"
#include "newtcut/polynomial.hpp"

namespace newtcut {

/// Candidate poles with per-element provenance (-1 is always present).
struct PoleSet {
  std::vector<Rat> values;                    // sorted ascending
  std::map<Rat, std::vector<int>> provenance; // facet indices; empty for -1
};

PoleSet candidate_poles(const NewtonPolyhedron& P);
PoleSet reduced_candidate_poles(const NewtonPolyhedron& P, const BSet& B);

enum class RemovableMode { consistent, compatible_n3 };

/// Slopes whose full class consists of B1-facets admitting the mode's
/// assignment, each with the witnessing BSet.
std::map<Rat, BSet> removable_slope_classes(const NewtonPolyhedron& P, RemovableMode mode);

/// Integer-coefficient polynomial in one variable, ascending coefficients.
struct IntPoly {
  std::vector<BigInt> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
};

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_add(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_scale(const IntPoly& a, const BigInt& k);
IntPoly ipoly_gcd(const IntPoly& a, const IntPoly& b);
bool ipoly_divides(const IntPoly& d, const IntPoly& a, IntPoly& quotient);

/// Reduced rational function in s: primitive integer numerator and denominator
/// with trivial gcd and positive leading denominator coefficient.
struct RationalFunctionInS {
  IntPoly num;
  IntPoly den{{BigInt(1)}};
};

RationalFunctionInS rf_reduce(IntPoly num, IntPoly den);
RationalFunctionInS rf_add(const RationalFunctionInS& a, const RationalFunctionInS& b);
bool rf_equal(const RationalFunctionInS& a, const RationalFunctionInS& b);

struct Stratum {
  long long chi = 0;
  std::vector<std::pair<long long, long long>> divisors;  // (N, nu) pairs
};

/// Sum of chi / prod (N s + nu) over the strata, canonically reduced.
RationalFunctionInS assemble_topological_zeta(const std::vector<Stratum>& strata);

struct PoleExtraction {
  std::vector<Rat> poles;                 // sorted ascending
  std::map<Rat, int> multiplicity;
  bool complete = true;                   // false when a nonlinear factor remains
  IntPoly residual;                       // the unfactored denominator part
};

/// Rational roots of the reduced denominator.
PoleExtraction actual_poles(const RationalFunctionInS& z);

/// Rendering such as (s+3)/((s+1)(2s+3)); falls back to raw coefficients when
/// the denominator has irrational factors.
std::string render(const RationalFunctionInS& z);

}  // namespace newtcut
