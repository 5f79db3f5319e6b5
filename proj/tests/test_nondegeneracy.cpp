#include <doctest.h>

#include "newtcut/nondegeneracy.hpp"
#include "test_util.hpp"

using namespace newtcut;
using namespace testutil;

TEST_CASE("the examples are nondegenerate on every compact face") {
  OracleConfig cfg;
  for (const Polynomial& f : {f1(), f2(), f3()}) {
    NewtonPolyhedron P = newton_polyhedron(f);
    for (const auto& v : nondegeneracy_check(f, P, cfg)) {
      CHECK(v.pass());
      CHECK(v.verdict != Verdict::degenerate);
    }
  }
}

TEST_CASE("a squared linear form is degenerate along its edge") {
  Polynomial f = parse_polynomial("x1^2+2*x1*x2+x2^2", 2);
  NewtonPolyhedron P = newton_polyhedron(f);
  OracleConfig cfg;
  bool sawDegenerate = false;
  for (const auto& v : nondegeneracy_check(f, P, cfg)) {
    const Face& face = P.face(v.face);
    if (face.dim == 1 && face.compact()) {
      CHECK(v.verdict == Verdict::degenerate);
      CHECK(v.method == NondegeneracyVerdict::Method::exact_low_dim);
      REQUIRE(v.witness.has_value());
      // a point on the line x1 = -x2, the locus of (1, -1) mod p
      long long p = v.witness->prime;
      CHECK((v.witness->point[0] + v.witness->point[1]) % p == 0);
      sawDegenerate = true;
    } else {
      CHECK(v.pass());  // vertex faces are monomials
    }
  }
  CHECK(sawDegenerate);
}

TEST_CASE("vertex faces are always nondegenerate") {
  Polynomial f = f1();
  NewtonPolyhedron P = newton_polyhedron(f);
  OracleConfig cfg;
  for (const auto& v : nondegeneracy_check(f, P, cfg)) {
    if (P.face(v.face).dim == 0) {
      CHECK(v.verdict == Verdict::nondegenerate);
      CHECK(v.method == NondegeneracyVerdict::Method::exact_low_dim);
    }
  }
}

TEST_CASE("exact low-dimension verdicts agree with sampling") {
  OracleConfig cfg;
  for (const Polynomial& f : {f1(), f2(), f3()}) {
    NewtonPolyhedron P = newton_polyhedron(f);
    for (const auto& face : P.faces()) {
      if (!face.compact() || face.dim > 1) continue;
      Polynomial g = face_polynomial(f, P, face);
      NondegeneracyVerdict exact = check_face_nondegeneracy(g, face.dim, cfg);
      CHECK(exact.method == NondegeneracyVerdict::Method::exact_low_dim);
      if (exact.verdict == Verdict::nondegenerate) {
        for (long long p : cfg.primes)
          CHECK(!torus_singular_point(g, p, cfg.budget).has_value());
      }
    }
  }
}

TEST_CASE("oracle configuration is validated") {
  Polynomial f = f2();
  OracleConfig small;
  small.primes = {2};
  CHECK_THROWS_AS(check_face_nondegeneracy(f, 2, small), input_error);
  OracleConfig composite;
  composite.primes = {9};
  CHECK_THROWS_AS(check_face_nondegeneracy(f, 2, composite), input_error);
  OracleConfig divides;
  divides.primes = {3};
  Polynomial g = parse_polynomial("1/3*x1^2+x1*x2+x2^2", 2);
  CHECK_THROWS_AS(check_face_nondegeneracy(g, 2, divides), input_error);
  OracleConfig tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(check_face_nondegeneracy(f2(), 2, tiny), input_error);
}

TEST_CASE("witnesses are genuine common zeros mod p") {
  // x2 (x1+x2)^2: the compact edge carries a square factor
  Polynomial f = parse_polynomial("x1^2*x2+2*x1*x2^2+x2^3", 2);
  NewtonPolyhedron P = newton_polyhedron(f);
  OracleConfig cfg;
  for (const auto& v : nondegeneracy_check(f, P, cfg)) {
    if (v.verdict != Verdict::degenerate) continue;
    REQUIRE(v.witness.has_value());
    const Face& face = P.face(v.face);
    Polynomial g = face_polynomial(f, P, face);
    long long p = v.witness->prime;
    // evaluate g and all partials at the witness
    auto evalAt = [&](const Polynomial& h) {
      long long acc = 0;
      for (const auto& [a, c] : h.terms) {
        BigInt num = boost::multiprecision::numerator(c) % p;
        long long term = static_cast<long long>(num < 0 ? num + p : num);
        for (int i = 0; i < h.n; ++i)
          for (long long e = 0; e < a[i]; ++e) term = term * v.witness->point[i] % p;
        acc = (acc + term) % p;
      }
      return acc;
    };
    CHECK(evalAt(g) == 0);
    for (int i = 0; i < g.n; ++i) {
      Polynomial d;
      d.n = g.n;
      for (const auto& [a, c] : g.terms) {
        if (a[i] == 0) continue;
        IVec b = a;
        b[i] -= 1;
        d.terms[b] = c * a[i];
      }
      if (!d.terms.empty()) CHECK(evalAt(d) == 0);
    }
  }
}
