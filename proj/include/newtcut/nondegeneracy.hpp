#pragma once

#include "newtcut/polynomial.hpp"

namespace newtcut {

struct OracleConfig {
  std::vector<long long> primes{101, 103, 107};
  long long budget = 10'000'000;  // torus points per face and prime
};

enum class Verdict { nondegenerate, degenerate, probably_nondegenerate };

struct FiniteFieldWitness {
  long long prime = 0;
  IVec point;  // coordinates in [1, p-1], inactive variables at 1
};

struct NondegeneracyVerdict {
  int face = -1;
  enum class Method { exact_low_dim, finite_field_sampling } method = Method::exact_low_dim;
  std::vector<long long> primes;
  Verdict verdict = Verdict::nondegenerate;
  std::optional<FiniteFieldWitness> witness;
  bool pass() const { return verdict != Verdict::degenerate; }
};

/// Decides whether V(g) is singular somewhere in the torus, for the
/// restriction g of a polynomial to a face of the stated dimension. Exact for
/// faceDim <= 1, finite-field sampling above.
NondegeneracyVerdict check_face_nondegeneracy(const Polynomial& facePoly, int faceDim,
                                              const OracleConfig& config);

/// One verdict per compact face of the Newton polyhedron of f, in face order.
std::vector<NondegeneracyVerdict> nondegeneracy_check(const Polynomial& f,
                                                      const NewtonPolyhedron& P,
                                                      const OracleConfig& config);

/// Finite-field search for a common torus zero of g and its partials mod p.
std::optional<IVec> torus_singular_point(const Polynomial& g, long long p, long long budget);

void validate_oracle_config(const Polynomial& f, const OracleConfig& config);

}  // namespace newtcut
