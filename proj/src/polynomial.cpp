#include "newtcut/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace newtcut {

std::vector<IVec> Polynomial::support() const {
  std::vector<IVec> s;
  s.reserve(terms.size());
  for (const auto& [a, c] : terms) s.push_back(a);
  return s;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int n;

  explicit Parser(const std::string& t, int n_) : text(t), n(n_) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("syntax error at position " + std::to_string(pos) + ": " + what);
  }

  BigInt read_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return BigInt(text.substr(start, pos - start));
  }

  bool digit_next() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  bool var_next() {
    skip_ws();
    return pos < text.size() && text[pos] == 'x';
  }

  // leading optional rational coefficient, then '*'-separated variable powers
  void read_term(std::map<IVec, Rat>& acc, int sign) {
    Rat coeff = sign;
    bool sawAnything = false, pendingStar = false;
    if (digit_next()) {
      BigInt p = read_integer();
      Rat c(p);
      if (eat('/')) {
        BigInt q = read_integer();
        if (q == 0) fail("zero denominator");
        c = Rat(p, q);
      }
      coeff *= c;
      sawAnything = true;
      pendingStar = eat('*');
    }
    IVec expo(n, 0);
    while (var_next()) {
      ++pos;  // consume 'x'
      BigInt idx = read_integer();
      if (idx < 1 || idx > n) throw input_error("variable index out of range: x" + idx.str());
      long long k = checked_ll(idx) - 1;
      BigInt e = 1;
      if (eat('^')) {
        e = read_integer();
        if (e < 1) fail("exponent must be at least 1");
      }
      expo[k] += checked_ll(e);
      sawAnything = true;
      pendingStar = eat('*');
      if (!pendingStar) break;
    }
    if (!sawAnything) fail("expected a term");
    if (pendingStar) fail("dangling '*'");
    auto it = acc.find(expo);
    if (it == acc.end())
      acc.emplace(std::move(expo), coeff);
    else
      it->second += coeff;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n) {
  if (n < 1) throw input_error("dimension must be at least 1");
  Parser p(text, n);
  std::map<IVec, Rat> acc;
  int sign = 1;
  if (p.eat('-')) sign = -1;
  else p.eat('+');
  p.read_term(acc, sign);
  for (;;) {
    p.skip_ws();
    if (p.pos == p.text.size()) break;
    if (p.eat('+')) sign = 1;
    else if (p.eat('-')) sign = -1;
    else p.fail("expected + or -");
    p.read_term(acc, sign);
  }
  Polynomial f;
  f.n = n;
  for (auto& [a, c] : acc) {
    if (c == 0) continue;
    if (is_zero(a)) throw input_error("nonzero constant term");
    f.terms.emplace(a, c);
  }
  if (f.terms.empty()) throw input_error("all terms cancel");
  return f;
}

std::string to_string(const Polynomial& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : f.terms) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      if (coeff < 0) {
        os << " - ";
        coeff = -coeff;
      } else {
        os << " + ";
      }
    }
    bool needCoeff = (coeff != 1);
    if (needCoeff) os << coeff;
    bool needStar = needCoeff;
    bool anyVar = false;
    for (int i = 0; i < f.n; ++i) {
      if (a[i] == 0) continue;
      if (needStar) os << "*";
      os << "x" << (i + 1);
      if (a[i] > 1) os << "^" << a[i];
      needStar = true;
      anyVar = true;
    }
    if (!anyVar && !needCoeff) os << "1";
  }
  return os.str();
}

NewtonPolyhedron newton_polyhedron(const Polynomial& f, int maxDim) {
  return newton_polyhedron(f.support(), f.n, maxDim);
}

Polynomial face_polynomial(const Polynomial& f, const NewtonPolyhedron& P, const Face& face) {
  if (P.n() != f.n) throw input_error("face_polynomial: dimension mismatch");
  for (const auto& v : P.vertices()) {
    bool inSupport = false;
    for (const auto& [a, c] : f.terms)
      if (to_qvec(a) == v) inSupport = true;
    if (!inSupport) throw input_error("face_polynomial: polyhedron does not belong to f");
  }
  for (const auto& [a, c] : f.terms)
    if (!P.contains(to_qvec(a)))
      throw input_error("face_polynomial: polyhedron does not belong to f");
  if (face.index < 0 || face.index >= static_cast<int>(P.faces().size()) ||
      P.face(face.index).facetIdx != face.facetIdx)
    throw input_error("face_polynomial: face does not belong to the polyhedron");
  Polynomial out;
  out.n = f.n;
  for (const auto& [a, c] : f.terms) {
    bool onFace = true;
    for (int k : face.facetIdx)
      if (dot(to_qvec(a), P.facets()[k].normal) != P.facets()[k].level) onFace = false;
    if (onFace) out.terms.emplace(a, c);
  }
  if (out.terms.empty()) throw internal_error("face polynomial is empty");
  return out;
}

}  // namespace newtcut
