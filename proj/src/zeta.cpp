#include "newtcut/zeta.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace newtcut {

PoleSet candidate_poles(const NewtonPolyhedron& P) {
  PoleSet ps;
  ps.provenance[Rat(-1)] = {};
  for (size_t k = 0; k < P.facets().size(); ++k)
    if (P.facets()[k].level > 0)
      ps.provenance[facet_slope(P.facets()[k])].push_back(static_cast<int>(k));
  for (const auto& [s, src] : ps.provenance) ps.values.push_back(s);
  return ps;
}

PoleSet reduced_candidate_poles(const NewtonPolyhedron& P, const BSet& B) {
  PoleSet ps;
  ps.provenance[Rat(-1)] = {};
  for (size_t k = 0; k < P.facets().size(); ++k) {
    if (P.facets()[k].level <= 0) continue;
    if (std::binary_search(B.facets.begin(), B.facets.end(), static_cast<int>(k))) continue;
    ps.provenance[facet_slope(P.facets()[k])].push_back(static_cast<int>(k));
  }
  for (const auto& [s, src] : ps.provenance) ps.values.push_back(s);
  return ps;
}

std::map<Rat, BSet> removable_slope_classes(const NewtonPolyhedron& P, RemovableMode mode) {
  if (mode == RemovableMode::compatible_n3 && P.n() != 3)
    throw input_error("compatible mode is only certified for n = 3");
  std::map<Rat, BSet> out;
  auto certs = detect_b1(P);
  for (const auto& [slope, cls] : slope_classes(P)) {
    bool allB1 = true;
    for (int k : cls)
      if (!certs.count(k) || certs[k].empty()) allB1 = false;
    if (!allB1) continue;
    BChoice choice = (mode == RemovableMode::consistent) ? choose_consistent(cls, P)
                                                         : choose_compatible(cls, P);
    if (choice.ok()) out.emplace(slope, std::move(*choice.accepted));
  }
  return out;
}

namespace {

void trim(IntPoly& p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

using QPoly = std::vector<Rat>;

QPoly to_q(const IntPoly& p) { return QPoly(p.c.begin(), p.c.end()); }

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    qtrim(a);
  }
  return a;
}

std::optional<QPoly> qdiv_exact(QPoly a, const QPoly& b) {
  qtrim(a);
  if (b.empty()) return std::nullopt;
  if (a.empty()) return QPoly{};
  if (a.size() < b.size()) return std::nullopt;
  QPoly q(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    q[a.size() - b.size()] = f;
    for (size_t i = 0; i < b.size(); ++i) a[a.size() - b.size() + i] -= f * b[i];
    qtrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

IntPoly primitive_part(const QPoly& f) {
  BigInt l = 1;
  for (const auto& q : f) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  IntPoly p;
  for (const auto& q : f) p.c.push_back(boost::multiprecision::numerator(q * Rat(l)));
  trim(p);
  BigInt g = 0;
  for (const auto& x : p.c) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : p.c) x /= g;
  return p;
}

Rat eval_qpoly(const QPoly& f, const Rat& x) {
  Rat val = 0;
  for (size_t i = f.size(); i-- > 0;) val = val * x + f[i];
  return val;
}

}  // namespace

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return {};
  IntPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  trim(r);
  return r;
}

IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r);
  return r;
}

IntPoly ipoly_scale(const IntPoly& a, const BigInt& k) {
  if (k == 0) return {};
  IntPoly r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

IntPoly ipoly_gcd(const IntPoly& a, const IntPoly& b) {
  QPoly x = to_q(a), y = to_q(b);
  qtrim(x);
  qtrim(y);
  while (!y.empty()) {
    QPoly r = qmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  return primitive_part(x);
}

bool ipoly_divides(const IntPoly& d, const IntPoly& a, IntPoly& quotient) {
  auto q = qdiv_exact(to_q(a), to_q(d));
  if (!q) return false;
  quotient = primitive_part(*q);
  return true;
}

RationalFunctionInS rf_reduce(IntPoly num, IntPoly den) {
  trim(num);
  trim(den);
  if (den.zero()) throw input_error("zero denominator");
  if (num.zero()) return RationalFunctionInS{{}, {{BigInt(1)}}};
  QPoly qn = to_q(num), qd = to_q(den);
  IntPoly g = ipoly_gcd(num, den);
  if (g.degree() >= 1) {
    qn = *qdiv_exact(qn, to_q(g));
    qd = *qdiv_exact(qd, to_q(g));
  }
  // joint normalization: scale both by the same rational so that all
  // coefficients are integers with overall content 1
  BigInt l = 1;
  for (const auto& q : qn) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  for (const auto& q : qd) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  IntPoly rn, rd;
  for (const auto& q : qn) rn.c.push_back(boost::multiprecision::numerator(q * Rat(l)));
  for (const auto& q : qd) rd.c.push_back(boost::multiprecision::numerator(q * Rat(l)));
  trim(rn);
  trim(rd);
  BigInt content = 0;
  for (const auto& x : rn.c) content = boost::multiprecision::gcd(content, x);
  for (const auto& x : rd.c) content = boost::multiprecision::gcd(content, x);
  if (content > 1) {
    for (auto& x : rn.c) x /= content;
    for (auto& x : rd.c) x /= content;
  }
  if (rd.c.back() < 0) {
    for (auto& x : rn.c) x = -x;
    for (auto& x : rd.c) x = -x;
  }
  return RationalFunctionInS{std::move(rn), std::move(rd)};
}

RationalFunctionInS rf_add(const RationalFunctionInS& a, const RationalFunctionInS& b) {
  IntPoly num = ipoly_add(ipoly_mul(a.num, b.den), ipoly_mul(b.num, a.den));
  IntPoly den = ipoly_mul(a.den, b.den);
  return rf_reduce(std::move(num), std::move(den));
}

bool rf_equal(const RationalFunctionInS& a, const RationalFunctionInS& b) {
  return a.num.c == b.num.c && a.den.c == b.den.c;
}

RationalFunctionInS assemble_topological_zeta(const std::vector<Stratum>& strata) {
  RationalFunctionInS total{{}, {{BigInt(1)}}};
  for (const auto& st : strata) {
    std::set<std::pair<long long, long long>> seen;
    IntPoly den{{BigInt(1)}};
    for (const auto& [N, nu] : st.divisors) {
      if (N <= 0 || nu <= 0) throw input_error("divisor datum must have positive N and nu");
      if (!seen.insert({N, nu}).second) throw input_error("repeated divisor datum within a stratum");
      den = ipoly_mul(den, IntPoly{{BigInt(nu), BigInt(N)}});
    }
    total = rf_add(total, rf_reduce(IntPoly{{BigInt(st.chi)}}, std::move(den)));
  }
  return total;
}

PoleExtraction actual_poles(const RationalFunctionInS& z) {
  PoleExtraction out;
  IntPoly den = z.den;
  trim(den);
  while (den.degree() >= 1) {
    bool found = false;
    if (den.c.front() == 0) {
      IntPoly q;
      q.c.assign(den.c.begin() + 1, den.c.end());
      out.multiplicity[Rat(0)]++;
      den = std::move(q);
      continue;
    }
    BigInt lead = boost::multiprecision::abs(den.c.back());
    BigInt cst = boost::multiprecision::abs(den.c.front());
    std::vector<BigInt> constDivs, leadDivs;
    for (BigInt d = 1; d * d <= cst; ++d) {
      if (cst % d != 0) continue;
      constDivs.push_back(d);
      if (d * d != cst) constDivs.push_back(cst / d);
    }
    for (BigInt d = 1; d * d <= lead; ++d) {
      if (lead % d != 0) continue;
      leadDivs.push_back(d);
      if (d * d != lead) leadDivs.push_back(lead / d);
    }
    QPoly dq = to_q(den);
    for (const auto& p : constDivs) {
      for (const auto& q : leadDivs) {
        for (int sign : {1, -1}) {
          Rat root = Rat(sign * p) / Rat(q);
          if (eval_qpoly(dq, root) != 0) continue;
          IntPoly factor = primitive_part({-root, Rat(1)});
          IntPoly quotient;
          if (!ipoly_divides(factor, den, quotient))
            throw internal_error("root found but factor does not divide");
          // keep the overall leading coefficient on the residual
          BigInt scale = den.c.back() / (quotient.c.back() * factor.c.back());
          if (scale != 1) quotient = ipoly_scale(quotient, scale);
          out.multiplicity[root]++;
          den = std::move(quotient);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.residual = den;
  out.complete = den.degree() < 1;
  for (const auto& [r, m] : out.multiplicity) out.poles.push_back(r);
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

namespace {

std::string render_linear(long long N, long long nu) {
  std::ostringstream os;
  os << "(";
  if (N != 1) os << N;
  os << "s";
  if (nu != 0) os << "+" << nu;
  os << ")";
  return os.str();
}

std::string render_poly(const IntPoly& p) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const BigInt& c = p.c[d];
    if (c == 0) continue;
    BigInt a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (d == 0 || a != 1) os << a;
    if (d >= 1) os << "s";
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

}  // namespace

std::string render(const RationalFunctionInS& z) {
  if (z.num.zero()) return "0";
  if (z.den.degree() < 1) {
    if (z.den.c[0] == 1) return render_poly(z.num);
    std::string numStr = render_poly(z.num);
    if (z.num.degree() >= 1) return "(" + numStr + ")/" + z.den.c[0].str();
    return numStr + "/" + z.den.c[0].str();
  }
  PoleExtraction px = actual_poles(z);
  std::ostringstream os;
  std::string numStr = render_poly(z.num);
  if (z.num.degree() >= 1) os << "(" << numStr << ")";
  else os << numStr;
  os << "/";
  if (!px.complete) {
    os << "(" << render_poly(z.den) << ")";
    return os.str();
  }
  IntPoly check{{BigInt(1)}};
  std::ostringstream fac;
  std::vector<std::pair<std::pair<BigInt, BigInt>, int>> factors;  // ((N, nu), multiplicity)
  for (const auto& [root, mult] : px.multiplicity)
    factors.push_back({{boost::multiprecision::denominator(root),
                        -boost::multiprecision::numerator(root)},
                       mult});
  std::sort(factors.begin(), factors.end());
  for (const auto& [Nnu, mult] : factors) {
    const auto& [N, nu] = Nnu;
    for (int i = 0; i < mult; ++i) {
      fac << render_linear(checked_ll(N), checked_ll(nu));
      check = ipoly_mul(check, IntPoly{{nu, N}});
    }
  }
  Rat lead = Rat(z.den.c.back()) / Rat(check.c.back());
  if (lead != 1) os << "(" << to_string(lead) << "*" << fac.str() << ")";
  else os << "(" << fac.str() << ")";
  return os.str();
}

}  // namespace newtcut
