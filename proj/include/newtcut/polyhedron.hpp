#pragma once

#include <optional>

#include "newtcut/base.hpp"

namespace newtcut {

/// One facet inequality { a : a . u >= N } together with its incidence data.
struct HalfSpace {
  IVec normal;                      // primitive, entries >= 0
  Rat level;                        // N >= 0, rational
  std::vector<int> vertexIdx;       // vertices lying on the facet
  std::vector<int> noncompactDirs;  // i with u_i = 0
};

/// A face, canonically identified by the set of all facets containing it.
struct Face {
  int index = -1;
  std::vector<int> facetIdx;        // sorted; empty for the improper face
  int dim = -1;
  std::vector<int> vertexIdx;       // sorted
  std::vector<int> noncompactDirs;  // sorted
  bool compact() const { return noncompactDirs.empty(); }
};

/// A Newton Q-polyhedron: a finite intersection of half-spaces { a . u >= N }
/// with u in N^n, inside the nonnegative orthant. Recession cone is the full
/// orthant; vertices may be non-integral.
class NewtonPolyhedron {
 public:
  static constexpr int kDefaultMaxDim = 6;

  int n() const { return n_; }
  std::uint64_t id() const { return id_; }
  bool trivial() const { return trivial_; }

  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int idx) const { return faces_.at(idx); }
  const Face& improper_face() const { return faces_.at(improperIdx_); }

  /// Min of a . u over the polyhedron (attained at a vertex). u must be >= 0 entrywise.
  Rat phi(const IVec& u) const;
  Rat phi(const QVec& u) const;

  /// The face where a . u attains phi(u); the improper face iff u = 0.
  const Face& first_meet_locus(const IVec& u) const;

  /// Face with the given canonical facet set, if any.
  std::optional<int> face_by_facets(const std::vector<int>& facetIdx) const;

  /// Face given by any (not necessarily canonical) facet subset; nullopt if empty.
  std::optional<int> face_of_facet_subset(const std::vector<int>& facetIdx) const;

  /// Intersection of two faces as a face index, or nullopt when empty.
  std::optional<int> intersect_faces(int a, int b) const;

  bool contains(const QVec& point) const;

  /// True when the point satisfies the facet equality.
  bool on_facet(const QVec& point, int facet) const;

  friend NewtonPolyhedron polyhedron_from_points(const std::vector<QVec>& pts, int n, int maxDim);
  friend NewtonPolyhedron polyhedron_from_halfspaces(const std::vector<std::pair<IVec, Rat>>& hs,
                                                     int n, int maxDim);

 private:
  int n_ = 0;
  std::uint64_t id_ = 0;
  bool trivial_ = false;
  std::vector<QVec> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<Face> faces_;
  int improperIdx_ = -1;

  void finish();  // incidences, face lattice, invariant checks
};

/// Gamma_+ of a point set: conv of the union of (p + orthant) over the points.
NewtonPolyhedron polyhedron_from_points(const std::vector<QVec>& pts, int n,
                                        int maxDim = NewtonPolyhedron::kDefaultMaxDim);
NewtonPolyhedron newton_polyhedron(const std::vector<IVec>& support, int n,
                                   int maxDim = NewtonPolyhedron::kDefaultMaxDim);

/// Intersection of the given half-spaces with the orthant. Redundant inputs are
/// dropped; the full orthant comes back flagged trivial.
NewtonPolyhedron polyhedron_from_halfspaces(const std::vector<std::pair<IVec, Rat>>& hs, int n,
                                            int maxDim = NewtonPolyhedron::kDefaultMaxDim);

}  // namespace newtcut
