#pragma once

#include <random>

#include "newtcut/b1.hpp"
#include "newtcut/polynomial.hpp"

namespace testutil {

using namespace newtcut;

// the three worked examples
inline Polynomial f1() { return parse_polynomial("x1^2+x1*x2^4+x2^3*x3+x3^3", 3); }
inline Polynomial f2() { return parse_polynomial("x1^2+x2*x3", 3); }
inline Polynomial f3() { return parse_polynomial("x2*x3+x1^2*x2^2+x1^2*x3^2", 3); }

inline int facet_by_normal(const NewtonPolyhedron& P, const IVec& u) {
  for (size_t k = 0; k < P.facets().size(); ++k)
    if (P.facets()[k].normal == u) return static_cast<int>(k);
  return -1;
}

inline bool has_vertex(const NewtonPolyhedron& P, const QVec& v) {
  for (const auto& w : P.vertices())
    if (w == v) return true;
  return false;
}

inline QVec qvec(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

// random integer support, nonempty, without the origin
inline std::vector<IVec> random_support(std::mt19937& rng, int n, int maxPoints,
                                        long long maxEntry) {
  std::uniform_int_distribution<int> countDist(1, maxPoints);
  std::uniform_int_distribution<long long> entryDist(0, maxEntry);
  int count = countDist(rng);
  std::vector<IVec> pts;
  while (static_cast<int>(pts.size()) < count) {
    IVec a(n);
    for (int i = 0; i < n; ++i) a[i] = entryDist(rng);
    if (is_zero(a)) continue;
    pts.push_back(std::move(a));
  }
  return pts;
}

inline IVec random_direction(std::mt19937& rng, int n, long long maxEntry) {
  std::uniform_int_distribution<long long> entryDist(0, maxEntry);
  IVec u(n);
  for (int i = 0; i < n; ++i) u[i] = entryDist(rng);
  return u;
}

inline QVec random_orthant_point(std::mt19937& rng, int n, long long maxNum, long long maxDen) {
  std::uniform_int_distribution<long long> numDist(0, maxNum);
  std::uniform_int_distribution<long long> denDist(1, maxDen);
  QVec p(n);
  for (int i = 0; i < n; ++i) p[i] = Rat(numDist(rng), denDist(rng));
  return p;
}

}  // namespace testutil
