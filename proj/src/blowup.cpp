#include "newtcut/blowup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace newtcut {

int StackPresentation::position_of_ray(int rayIdx) const {
  for (size_t p = 0; p < rayOrder.size(); ++p)
    if (rayOrder[p] == rayIdx) return static_cast<int>(p);
  return -1;
}

StackPresentation cox_presentation(const Fan& fan) {
  StackPresentation sp;
  sp.n = fan.n;
  // standard rays e_1..e_n first, then exceptional rays by generator order
  std::vector<int> stdRays(fan.n, -1), exRays;
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const IVec& g = fan.rays[i].gen;
    if (sum(g) == 1) {
      for (int j = 0; j < fan.n; ++j)
        if (g[j] == 1) stdRays[j] = static_cast<int>(i);
    } else {
      exRays.push_back(static_cast<int>(i));
    }
  }
  for (int j = 0; j < fan.n; ++j)
    if (stdRays[j] < 0) throw input_error("cox_presentation: missing standard ray e" + std::to_string(j + 1));
  std::sort(exRays.begin(), exRays.end(),
            [&](int a, int b) { return fan.rays[a].gen < fan.rays[b].gen; });
  sp.rayOrder = stdRays;
  sp.rayOrder.insert(sp.rayOrder.end(), exRays.begin(), exRays.end());
  for (int j = 0; j < fan.n; ++j) sp.variableNames.push_back("x" + std::to_string(j + 1) + "'");
  for (size_t e = 0; e < exRays.size(); ++e) {
    sp.variableNames.push_back("u" + std::to_string(e + 1));
    sp.exceptional.push_back(fan.n + static_cast<int>(e));
  }

  const size_t R = sp.rayOrder.size();
  sp.beta.assign(fan.n, IVec(R, 0));
  for (size_t p = 0; p < R; ++p) {
    const IVec& g = fan.rays[sp.rayOrder[p]].gen;
    for (int i = 0; i < fan.n; ++i) sp.beta[i][p] = g[i];
  }
  // torus weights over the exceptional coordinates
  const size_t E = sp.exceptional.size();
  for (size_t p = 0; p < R; ++p) {
    IVec w(E, 0);
    if (p < static_cast<size_t>(fan.n)) {
      for (size_t e = 0; e < E; ++e) w[e] = sp.beta[p][sp.exceptional[e]];
    } else {
      w[p - fan.n] = -1;
    }
    sp.weights.push_back(std::move(w));
  }
  // the weight matrix is the kernel inclusion: beta composed with it vanishes
  for (int i = 0; i < fan.n; ++i)
    for (size_t e = 0; e < E; ++e) {
      long long acc = 0;
      for (size_t p = 0; p < R; ++p) acc += sp.beta[i][p] * sp.weights[p][e];
      if (acc != 0) throw internal_error("beta does not annihilate the torus weights");
    }
  // irrelevant ideal: one squarefree monomial per maximal cone
  std::set<std::vector<int>> gens;
  for (int m : fan.maximal) {
    const auto& cone = fan.cones[m];
    std::vector<int> missing;
    for (size_t p = 0; p < R; ++p)
      if (!std::binary_search(cone.rayIdx.begin(), cone.rayIdx.end(), sp.rayOrder[p]))
        missing.push_back(static_cast<int>(p));
    gens.insert(missing);
  }
  sp.irrelevantGenerators.assign(gens.begin(), gens.end());
  // monomial pullback of each coordinate
  for (int i = 0; i < fan.n; ++i) sp.pullback.push_back(sp.beta[i]);
  // charts
  for (int m : fan.maximal) {
    const auto& cone = fan.cones[m];
    Chart ch;
    ch.maximalCone = m;
    ch.rayIdx = cone.rayIdx;
    for (size_t p = 0; p < R; ++p)
      if (!std::binary_search(cone.rayIdx.begin(), cone.rayIdx.end(), sp.rayOrder[p]))
        ch.invertedVariables.push_back(static_cast<int>(p));
    if (static_cast<int>(cone.rayIdx.size()) == fan.n) {
      // simplicial chart: finite group from the off-cone coordinate rows
      std::vector<int> exInCone;
      std::set<int> coneStd;
      for (int r : cone.rayIdx) {
        if (sum(fan.rays[r].gen) == 1) {
          for (int j = 0; j < fan.n; ++j)
            if (fan.rays[r].gen[j] == 1) coneStd.insert(j);
        } else {
          exInCone.push_back(r);
        }
      }
      std::vector<BVec> M;
      for (int i = 0; i < fan.n; ++i) {
        if (coneStd.count(i)) continue;
        BVec row;
        for (int r : exInCone) row.push_back(fan.rays[r].gen[i]);
        M.push_back(std::move(row));
      }
      ChartGroup grp;
      if (!M.empty()) {
        for (const auto& d : smith_diagonal(M))
          if (d > 1) grp.invariantFactors.push_back(d);
      }
      std::vector<QVec> B;
      for (int r : cone.rayIdx) B.push_back(to_qvec(fan.rays[r].gen));
      Rat dq = det(transpose(B));
      grp.order = boost::multiprecision::abs(boost::multiprecision::numerator(dq));
      BigInt factorProduct = 1;
      for (const auto& d : grp.invariantFactors) factorProduct *= d;
      if (factorProduct != grp.order)
        throw internal_error("chart group order disagrees with |det B_sigma|");
      ch.group = std::move(grp);
    }
    sp.charts.push_back(std::move(ch));
  }
  return sp;
}

std::string TransformedPolynomial::render() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool needStar = false;
    if (c != 1) {
      os << c;
      needStar = true;
    }
    bool anyVar = false;
    for (size_t p = 0; p < t.exponents.size(); ++p) {
      if (t.exponents[p] == 0) continue;
      if (needStar) os << "*";
      os << variableNames[p];
      if (t.exponents[p] > 1) os << "^" << t.exponents[p];
      needStar = true;
      anyVar = true;
    }
    if (!anyVar && c == 1) os << "1";
  }
  return os.str();
}

TransformedPolynomial proper_transform(const Polynomial& f, const Fan& fan,
                                       const NewtonPolyhedron& sourcePoly) {
  StackPresentation sp = cox_presentation(fan);
  TransformedPolynomial out;
  out.n = f.n;
  out.rayOrder = sp.rayOrder;
  out.variableNames = sp.variableNames;
  for (int r : sp.rayOrder) {
    Rat level = sourcePoly.phi(fan.rays[r].gen);
    if (boost::multiprecision::denominator(level) != 1)
      throw internal_error("proper_transform: non-integral ray level");
    out.raySubtracted.push_back(checked_ll(boost::multiprecision::numerator(level)));
  }
  std::vector<bool> attained(sp.rayOrder.size(), false);
  for (const auto& [a, c] : f.terms) {
    TransformedPolynomial::Term t;
    t.coeff = c;
    t.source = a;
    for (size_t p = 0; p < sp.rayOrder.size(); ++p) {
      long long e = dot(a, fan.rays[sp.rayOrder[p]].gen) - out.raySubtracted[p];
      if (e < 0)
        throw input_error(
            "proper_transform: negative exponent; the fan is not compatible with the Newton "
            "polyhedron of f");
      if (e == 0) attained[p] = true;
      t.exponents.push_back(e);
    }
    out.terms.push_back(std::move(t));
  }
  for (size_t p = 0; p < attained.size(); ++p)
    if (!attained[p])
      throw input_error(
          "proper_transform: ray level is not attained; the fan is not compatible with the "
          "Newton polyhedron of f");
  return out;
}

std::vector<std::pair<long long, long long>> relative_canonical(const Fan& fan) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& r : fan.rays) {
    long long nu = sum(r.gen);
    out.emplace_back(nu - 1, nu);
  }
  return out;
}

TransformedPolynomial orbit_restriction(const TransformedPolynomial& fp,
                                        const std::vector<int>& coneRayIdx) {
  std::vector<int> positions;
  for (int r : coneRayIdx) {
    int p = -1;
    for (size_t q = 0; q < fp.rayOrder.size(); ++q)
      if (fp.rayOrder[q] == r) p = static_cast<int>(q);
    if (p < 0) throw input_error("orbit_restriction: cone ray outside the fan");
    positions.push_back(p);
  }
  TransformedPolynomial out;
  out.n = fp.n;
  out.rayOrder = fp.rayOrder;
  out.variableNames = fp.variableNames;
  out.raySubtracted = fp.raySubtracted;
  for (const auto& t : fp.terms) {
    bool survives = true;
    for (int p : positions)
      if (t.exponents[p] != 0) survives = false;
    if (survives) out.terms.push_back(t);
  }
  return out;
}

std::vector<std::pair<long long, long long>> numerical_data(const Fan& fan,
                                                            const NewtonPolyhedron& gammaPlus) {
  std::set<std::pair<long long, long long>> data;
  data.emplace(1, 1);
  for (const auto& r : fan.rays) {
    Rat level = gammaPlus.phi(r.gen);
    if (level <= 0) continue;
    if (boost::multiprecision::denominator(level) != 1)
      throw internal_error("numerical_data: non-integral level");
    data.emplace(checked_ll(boost::multiprecision::numerator(level)), sum(r.gen));
  }
  return {data.begin(), data.end()};
}

}  // namespace newtcut
