#include "newtcut/base.hpp"

#include <limits>
#include <sstream>

namespace newtcut {

long long checked_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw internal_error("integer out of machine range: " + v.str());
  return static_cast<long long>(v);
}

IVec to_ivec(const BVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_ll(v[i]);
  return r;
}

BVec to_bvec(const IVec& v) { return BVec(v.begin(), v.end()); }

QVec to_qvec(const IVec& v) { return QVec(v.begin(), v.end()); }

BigInt dot(const BVec& a, const BVec& b) {
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long dot(const IVec& a, const IVec& b) {
  return checked_ll(dot(to_bvec(a), to_bvec(b)));
}

Rat dot(const QVec& a, const IVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const BVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void make_primitive(BVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

IVec primitive(const IVec& v) {
  BVec b = to_bvec(v);
  make_primitive(b);
  return to_ivec(b);
}

IVec primitive_of_rational(const QVec& v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  BVec b(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(l);
    b[i] = boost::multiprecision::numerator(scaled);
  }
  make_primitive(b);
  return to_ivec(b);
}

long long sum(const IVec& v) {
  long long s = 0;
  for (auto x : v) s += x;
  return s;
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// Gaussian elimination; returns number of pivots, leaves rows in echelon form.
static int eliminate(std::vector<QVec>& rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(std::vector<QVec> rows) { return eliminate(rows); }

Rat det(std::vector<QVec> rows) {
  const size_t n = rows.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && rows[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(rows[c], rows[piv]);
      d = -d;
    }
    d *= rows[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[c][c];
      for (size_t j = c; j < n; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return d;
}

std::vector<QVec> transpose(const std::vector<QVec>& rows) {
  if (rows.empty()) return {};
  std::vector<QVec> t(rows[0].size(), QVec(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) t[j][i] = rows[i][j];
  return t;
}

bool solve(const std::vector<QVec>& cols, const QVec& rhs, QVec& out) {
  // Augmented elimination on [cols | rhs] viewed row-wise; free variables are fixed at zero.
  const size_t m = rhs.size(), k = cols.size();
  std::vector<QVec> aug(m, QVec(k + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
    aug[i][k] = rhs[i];
  }
  eliminate(aug);  // reduced form: pivot columns are cleared above and below
  out.assign(k, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    size_t c = 0;
    while (c < k && aug[i][c] == 0) ++c;
    if (c == k) {
      if (aug[i][k] != 0) return false;  // inconsistent
      continue;
    }
    out[c] = aug[i][k] / aug[i][c];
  }
  for (size_t i = 0; i < m; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < k; ++j) s += cols[j][i] * out[j];
    if (s != rhs[i]) return false;
  }
  return true;
}

std::vector<BigInt> smith_diagonal(std::vector<BVec> m) {
  using boost::multiprecision::abs;
  if (m.empty() || m[0].empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  std::vector<BigInt> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // locate a nonzero pivot of minimal absolute value
    size_t pr = rows, pc = cols;
    BigInt best = 0;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[top], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);
    bool clean = true;
    for (size_t i = top + 1; i < rows; ++i) {
      BigInt q = m[i][top] / m[top][top];
      if (q != 0)
        for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
      if (m[i][top] != 0) clean = false;
    }
    for (size_t j = top + 1; j < cols; ++j) {
      BigInt q = m[top][j] / m[top][top];
      if (q != 0)
        for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared, pick a new pivot
    diag.push_back(abs(m[top][top]));
    ++top;
  }
  // enforce divisibility chain
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  return diag;
}

}  // namespace newtcut
