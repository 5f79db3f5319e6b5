#pragma once

#include <optional>

#include "newtcut/polyhedron.hpp"

namespace newtcut {

struct Ray {
  IVec gen;                      // primitive generator in N^n
  std::optional<int> dualFacet;  // facet index in the source polyhedron
  bool standard = false;         // gen = e_i
};

struct Cone {
  std::vector<int> rayIdx;      // sorted
  int dim = 0;
  std::optional<int> dualFace;  // face index in the source polyhedron
};

/// A fan refining the nonnegative orthant. Normal fans carry duality links to
/// their source polyhedron; subdivisions carry only the cone combinatorics.
struct Fan {
  int n = 0;
  std::vector<Ray> rays;
  std::vector<Cone> cones;    // closed under taking faces
  std::vector<int> maximal;   // indices into cones
  bool simplicial = false;
  std::optional<std::uint64_t> sourcePolyId;

  int ray_by_gen(const IVec& gen) const;  // -1 when absent
  const Cone* cone_by_rays(const std::vector<int>& rayIdx) const;
};

/// Normal fan of a Newton Q-polyhedron: rays are the facet normals, cones are
/// dual to faces via facet containment, maximal cones are dual to vertices.
Fan normal_fan(const NewtonPolyhedron& P);

/// Face of P dual to a cone of its normal fan, and back.
const Face& dual_face(const Fan& fan, const NewtonPolyhedron& P, int coneIdx);
const Cone& dual_cone(const Fan& fan, const NewtonPolyhedron& P, const Face& face);

/// Unordered ray pairs spanning a 2-cone of the fan.
std::vector<std::pair<int, int>> ray_adjacency(const Fan& fan);

/// The smallest fan cone whose ray set contains the given rays, if any.
std::optional<int> inscribed(const std::vector<int>& rayIdx, const Fan& fan);

/// Pulling subdivision: same rays, simplicial cones, every cone inscribed in a
/// cone of the input. Rays are pulled in lexicographic order of generator.
Fan frugal_simplicial_subdivision(const Fan& fan);

/// Membership of a point in the cone spanned by the given rays.
bool cone_contains(const Fan& fan, const std::vector<int>& rayIdx, const QVec& point);

/// Some maximal cone containing the point, or nullopt when outside the support.
std::optional<int> maximal_cone_containing(const Fan& fan, const QVec& point);

}  // namespace newtcut
