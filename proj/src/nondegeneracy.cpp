#include "newtcut/nondegeneracy.hpp"

#include <algorithm>

namespace newtcut {

namespace {

long long mod_pow(long long base, long long e, long long p) {
  long long r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

// coefficient mod p; the prime must not divide the denominator
long long coeff_mod_p(const Rat& c, long long p) {
  BigInt num = boost::multiprecision::numerator(c);
  BigInt den = boost::multiprecision::denominator(c);
  if (den % p == 0) throw input_error("prime divides a coefficient denominator");
  long long n = static_cast<long long>(num % p);
  if (n < 0) n += p;
  long long d = static_cast<long long>(den % p);
  return n * mod_inverse(d, p) % p;
}

// divide out the per-variable minimum exponent; harmless on the torus
Polynomial strip_monomial(const Polynomial& g) {
  IVec mins(g.n, -1);
  for (const auto& [a, c] : g.terms)
    for (int i = 0; i < g.n; ++i) mins[i] = (mins[i] < 0) ? a[i] : std::min(mins[i], a[i]);
  Polynomial h;
  h.n = g.n;
  for (const auto& [a, c] : g.terms) {
    IVec b(g.n);
    for (int i = 0; i < g.n; ++i) b[i] = a[i] - mins[i];
    h.terms.emplace(std::move(b), c);
  }
  return h;
}

// univariate polynomials over Q, ascending coefficients
using UPoly = std::vector<Rat>;

void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly uderiv(const UPoly& f) {
  UPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rat(i));
  utrim(d);
  return d;
}

UPoly umod(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    utrim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

void validate_oracle_config(const Polynomial& f, const OracleConfig& config) {
  if (config.primes.empty()) throw input_error("no primes configured");
  for (long long p : config.primes) {
    if (p < 3) throw input_error("prime too small (< 3): " + std::to_string(p));
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw input_error("configured modulus is not prime: " + std::to_string(p));
    for (const auto& [a, c] : f.terms)
      if (boost::multiprecision::denominator(c) % p == 0)
        throw input_error("prime divides a coefficient denominator");
  }
}

std::optional<IVec> torus_singular_point(const Polynomial& g, long long p, long long budget) {
  Polynomial h = strip_monomial(g);
  std::vector<int> active;
  for (int i = 0; i < h.n; ++i) {
    bool appears = false;
    for (const auto& [a, c] : h.terms)
      if (a[i] > 0) appears = true;
    if (appears) active.push_back(i);
  }
  if (active.empty()) return std::nullopt;  // nonzero constant on the torus

  double size = 1;
  for (size_t i = 0; i < active.size(); ++i) size *= static_cast<double>(p - 1);
  if (size > static_cast<double>(budget))
    throw input_error("torus enumeration exceeds the configured budget");

  struct Term {
    long long coeff;
    IVec expo;  // over active positions
  };
  std::vector<Term> terms;
  for (const auto& [a, c] : h.terms) {
    Term t;
    t.coeff = coeff_mod_p(c, p);
    for (int i : active) t.expo.push_back(a[i]);
    terms.push_back(std::move(t));
  }
  // value^exponent lookup per (term, active var)
  std::vector<std::vector<std::vector<long long>>> pow(terms.size());
  for (size_t t = 0; t < terms.size(); ++t) {
    pow[t].resize(active.size());
    for (size_t i = 0; i < active.size(); ++i) {
      pow[t][i].resize(p);
      for (long long v = 1; v < p; ++v) pow[t][i][v] = mod_pow(v, terms[t].expo[i], p);
    }
  }
  std::vector<long long> inv(p);
  for (long long v = 1; v < p; ++v) inv[v] = mod_inverse(v, p);

  IVec x(active.size(), 1);
  std::vector<long long> termVal(terms.size());
  for (;;) {
    long long f = 0;
    for (size_t t = 0; t < terms.size(); ++t) {
      long long m = terms[t].coeff;
      for (size_t i = 0; i < active.size(); ++i) m = m * pow[t][i][x[i]] % p;
      termVal[t] = m;
      f = (f + m) % p;
    }
    if (f == 0) {
      bool allPartialsVanish = true;
      for (size_t i = 0; i < active.size() && allPartialsVanish; ++i) {
        long long d = 0;
        for (size_t t = 0; t < terms.size(); ++t)
          d = (d + termVal[t] % p * (terms[t].expo[i] % p)) % p;
        // d = x_i * (df/dx_i); x_i is a unit, so vanishing is equivalent
        if (d % p != 0) allPartialsVanish = false;
      }
      if (allPartialsVanish) {
        IVec full(h.n, 1);
        for (size_t i = 0; i < active.size(); ++i) full[active[i]] = x[i];
        return full;
      }
    }
    // odometer over [1, p-1]^active
    size_t i = 0;
    while (i < active.size()) {
      if (++x[i] < p) break;
      x[i] = 1;
      ++i;
    }
    if (i == active.size()) break;
  }
  return std::nullopt;
}

NondegeneracyVerdict check_face_nondegeneracy(const Polynomial& facePoly, int faceDim,
                                              const OracleConfig& config) {
  validate_oracle_config(facePoly, config);
  NondegeneracyVerdict v;
  if (faceDim <= 0 || facePoly.terms.size() == 1) {
    // a monomial never vanishes on the torus
    v.method = NondegeneracyVerdict::Method::exact_low_dim;
    v.verdict = Verdict::nondegenerate;
    return v;
  }
  if (faceDim == 1) {
    v.method = NondegeneracyVerdict::Method::exact_low_dim;
    // support lies on a segment: reduce to a univariate polynomial along it
    std::vector<IVec> pts = facePoly.support();
    IVec d(facePoly.n);
    for (int i = 0; i < facePoly.n; ++i) d[i] = pts[1][i] - pts[0][i];
    d = primitive(d);
    // signed step count of each point relative to the minimum
    int pivot = -1;
    for (int i = 0; i < facePoly.n; ++i)
      if (d[i] != 0) pivot = i;
    std::vector<long long> steps;
    for (const auto& a : pts) steps.push_back((a[pivot] - pts[0][pivot]) / d[pivot]);
    long long lo = *std::min_element(steps.begin(), steps.end());
    long long hi = *std::max_element(steps.begin(), steps.end());
    UPoly g(hi - lo + 1, Rat(0));
    {
      size_t idx = 0;
      for (const auto& [a, c] : facePoly.terms) {
        (void)a;
        g[steps[idx] - lo] += c;
        ++idx;
      }
    }
    utrim(g);
    UPoly h = ugcd(g, uderiv(g));
    // t never divides g after shifting, so a nonconstant gcd means a nonzero
    // multiple root
    bool degenerate = h.size() > 1;
    v.verdict = degenerate ? Verdict::degenerate : Verdict::nondegenerate;
    if (degenerate) {
      // best-effort finite-field witness; the verdict itself is exact
      try {
        for (long long p : config.primes) {
          auto w = torus_singular_point(facePoly, p, config.budget);
          if (w) {
            v.witness = FiniteFieldWitness{p, *w};
            break;
          }
        }
      } catch (const input_error&) {
      }
    }
    return v;
  }
  // dimension >= 2: exhaustive finite-field search
  v.method = NondegeneracyVerdict::Method::finite_field_sampling;
  v.primes = config.primes;
  for (long long p : config.primes) {
    auto w = torus_singular_point(facePoly, p, config.budget);
    if (w) {
      v.verdict = Verdict::degenerate;
      v.witness = FiniteFieldWitness{p, *w};
      return v;
    }
  }
  v.verdict = Verdict::probably_nondegenerate;
  return v;
}

std::vector<NondegeneracyVerdict> nondegeneracy_check(const Polynomial& f,
                                                      const NewtonPolyhedron& P,
                                                      const OracleConfig& config) {
  std::vector<NondegeneracyVerdict> out;
  for (const auto& face : P.faces()) {
    if (!face.compact()) continue;
    Polynomial g = face_polynomial(f, P, face);
    NondegeneracyVerdict v = check_face_nondegeneracy(g, face.dim, config);
    v.face = face.index;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace newtcut
