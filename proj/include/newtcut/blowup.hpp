#pragma once

#include "newtcut/fan.hpp"
#include "newtcut/polynomial.hpp"

namespace newtcut {

/// Finite abelian group attached to a simplicial chart: the cokernel of the
/// off-cone coordinate rows of beta, presented by its invariant factors.
struct ChartGroup {
  std::vector<BigInt> invariantFactors;  // nontrivial ones (> 1)
  BigInt order = 1;                      // |det B_sigma|
};

struct Chart {
  int maximalCone = -1;          // cone index in the fan
  std::vector<int> rayIdx;       // the cone's rays
  std::vector<int> invertedVariables;  // variables of the chart monomial x'_sigma
  std::optional<ChartGroup> group;     // present for simplicial charts
};

/// Cox-construction data of a fan: variables, beta matrix, torus weights,
/// irrelevant ideal, monomial pullbacks and chart descriptions.
struct StackPresentation {
  int n = 0;
  std::vector<int> rayOrder;  // fan ray indices, standard rays e_1..e_n first
  std::vector<std::string> variableNames;      // per rayOrder position
  std::vector<int> exceptional;                // positions in rayOrder
  std::vector<IVec> beta;                      // n rows, one column per rayOrder position
  std::vector<IVec> weights;                   // per variable, Z^{exceptional} weight row
  std::vector<std::vector<int>> irrelevantGenerators;  // variable positions per maximal cone
  std::vector<IVec> pullback;                  // per coordinate i, exponents over rayOrder
  std::vector<Chart> charts;

  int position_of_ray(int rayIdx) const;
};

StackPresentation cox_presentation(const Fan& fan);

/// The proper transform of f on the fan: one variable per ray, the term of
/// exponent a getting exponent a.u_rho - N_rho on the ray rho.
struct TransformedPolynomial {
  int n = 0;
  std::vector<int> rayOrder;                // as in the presentation
  std::vector<std::string> variableNames;
  std::vector<long long> raySubtracted;     // N_rho per rayOrder position
  struct Term {
    IVec exponents;  // over rayOrder positions
    Rat coeff;
    IVec source;     // original exponent vector
  };
  std::vector<Term> terms;

  std::string render() const;
};

TransformedPolynomial proper_transform(const Polynomial& f, const Fan& fan,
                                       const NewtonPolyhedron& sourcePoly);

/// Multiplicity |u_rho| - 1 of each ray in the relative canonical divisor,
/// together with nu_rho = |u_rho|.
std::vector<std::pair<long long, long long>> relative_canonical(const Fan& fan);

/// Substitutes x'_rho = 0 for the rays of the cone; surviving terms are the
/// ones supported on the intersection of the dual facets.
TransformedPolynomial orbit_restriction(const TransformedPolynomial& fp,
                                        const std::vector<int>& coneRayIdx);

/// {(1,1)} together with (N_rho, |u_rho|) over the rays with N_rho > 0.
std::vector<std::pair<long long, long long>> numerical_data(const Fan& fan,
                                                            const NewtonPolyhedron& gammaPlus);

}  // namespace newtcut
