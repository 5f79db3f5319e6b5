#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace newtcut {

using BigInt = boost::multiprecision::cpp_int;
using Rat    = boost::multiprecision::cpp_rational;

/// Lattice vectors (exponents, primitive ray generators, facet normals).
using IVec = std::vector<long long>;
/// Rational points (polyhedron vertices, test points).
using QVec = std::vector<Rat>;
using BVec = std::vector<BigInt>;

/// Raised on malformed user input (bad grammar, invalid flags, broken preconditions).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a structural invariant the theory guarantees fails to hold.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

long long checked_ll(const BigInt& v);

IVec to_ivec(const BVec& v);
BVec to_bvec(const IVec& v);
QVec to_qvec(const IVec& v);

BigInt dot(const BVec& a, const BVec& b);
long long dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);

bool is_zero(const IVec& v);
bool is_zero(const BVec& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
void make_primitive(BVec& v);
IVec primitive(const IVec& v);

/// Scales a rational vector to its primitive integer multiple.
IVec primitive_of_rational(const QVec& v);

long long sum(const IVec& v);

std::string to_string(const Rat& q);
std::string to_string(const IVec& v);

// --- small exact linear algebra over the rationals ---

int rank(std::vector<QVec> rows);

/// Determinant of a square rational matrix.
Rat det(std::vector<QVec> rows);

/// Solves sum_j x_j * cols[j] = rhs; empty result when the system is inconsistent.
std::vector<QVec> transpose(const std::vector<QVec>& rows);
bool solve(const std::vector<QVec>& cols, const QVec& rhs, QVec& out);

/// Smith normal form diagonal of an integer matrix (nonnegative invariant factors).
std::vector<BigInt> smith_diagonal(std::vector<BVec> m);

}  // namespace newtcut
