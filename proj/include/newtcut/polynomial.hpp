#pragma once

#include <map>

#include "newtcut/polyhedron.hpp"

namespace newtcut {

/// A polynomial over Q with zero constant term, stored as its expanded term map.
struct Polynomial {
  int n = 0;
  std::map<IVec, Rat> terms;  // exponent vector -> nonzero coefficient

  std::vector<IVec> support() const;
};

/// Parses the grammar: terms separated by + or -, each an optional rational
/// coefficient `p` or `p/q` and `*`-separated powers `xk^e` with variables
/// among x1..xn. Like terms are combined; a surviving constant term or a
/// polynomial that cancels to zero is rejected.
Polynomial parse_polynomial(const std::string& text, int n);

std::string to_string(const Polynomial& f);

/// Newton polyhedron of the support of f.
NewtonPolyhedron newton_polyhedron(const Polynomial& f,
                                   int maxDim = NewtonPolyhedron::kDefaultMaxDim);

/// Restriction of f to the terms lying on a face of its Newton polyhedron.
Polynomial face_polynomial(const Polynomial& f, const NewtonPolyhedron& P, const Face& face);

}  // namespace newtcut
