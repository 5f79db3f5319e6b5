#pragma once

#include <map>

#include "newtcut/fan.hpp"
#include "newtcut/polyhedron.hpp"

namespace newtcut {

/// Witness that a facet is B1: an apex vertex with coordinate 1 in the base
/// direction, every other vertex of the facet on the matching coordinate
/// hyperplane, and the facet compact in that direction.
struct B1Certificate {
  int facet = -1;
  IVec apex;
  int base = -1;
};

enum class BMode { consistent, compatible, general };

/// A validated set of facets to drop, with chosen certificates and the
/// equivalence classes under the closure of facet adjacency.
struct BSet {
  std::vector<int> facets;  // sorted polyhedron facet indices
  BMode mode = BMode::consistent;
  std::map<int, B1Certificate> chosen;        // per facet (empty in general mode)
  std::vector<std::vector<int>> classes;      // partition of facets under ~
  std::vector<std::optional<IVec>> classApex; // per class, consistent mode
  std::vector<std::optional<int>> classBase;

  bool empty() const { return facets.empty(); }
  int class_of(int facet) const;
};

struct Refusal {
  std::string reason;
  std::vector<int> blockingFacets;
};

/// Accepted BSet or a refusal naming the blocking facets.
struct BChoice {
  std::optional<BSet> accepted;
  Refusal refusal;
  bool ok() const { return accepted.has_value(); }
};

/// All (apex, base) certificates per positive-level facet; an absent entry or
/// empty list means the facet is not B1.
std::map<int, std::vector<B1Certificate>> detect_b1(const NewtonPolyhedron& P);

/// Consistent base directions: one shared direction per adjacency class.
BChoice choose_consistent(const std::vector<int>& facets, const NewtonPolyhedron& P);

/// Compatible apices: per-facet choices such that adjacent facets sharing the
/// chosen apex share the base direction; exhaustive search with pruning.
BChoice choose_compatible(const std::vector<int>& facets, const NewtonPolyhedron& P);

/// Facets to drop without B1 validation; members may not lie in a translate of
/// a coordinate hyperplane. The verifier decides validity empirically.
BChoice choose_general(const std::vector<int>& facets, const NewtonPolyhedron& P);

/// Positive-level facets grouped by slope -|u|/N.
std::map<Rat, std::vector<int>> slope_classes(const NewtonPolyhedron& P);

Rat facet_slope(const HalfSpace& f);

/// Facet adjacency: shared codimension-2 face.
bool facets_adjacent(const NewtonPolyhedron& P, int a, int b);

struct BCutResult {
  NewtonPolyhedron polyhedron;                      // the B-cut
  std::vector<std::pair<int, int>> correspondence;  // retained facet -> dagger facet
  bool trivial = false;
};

/// Drops the half-spaces of the facets in B and rebuilds the polyhedron, with
/// the facet bijection of the retained half-spaces.
BCutResult b_cut(const NewtonPolyhedron& P, const BSet& B);

struct ConeClassification {
  std::vector<int> rayIdx;  // in the dagger fan
  bool isOld = false;
  std::optional<int> intersectionFace;  // face of P, old cones
  std::optional<int> classIdx;          // B-class index, new cones
  std::optional<int> baseDirection;     // b(class), new cones
  std::optional<int> baseRay;           // dagger-fan ray index of e_b
  std::vector<int> subConeRayIdx;       // sigma minus the base ray, new cones
};

/// Classifies the cones of the dagger fan (and any inscribable ray subsets of
/// its maximal cones) as old or new, checking that the face-intersection and
/// inscribability criteria agree.
class ConeClassifier {
 public:
  ConeClassifier(const Fan& fanDagger, const NewtonPolyhedron& P, const Fan& originalFan,
                 const BSet& B);

  ConeClassification classify(const std::vector<int>& daggerRayIdx) const;

  /// All distinct nonempty ray subsets of maximal dagger cones that are not
  /// contained in a coordinate hyperplane, in canonical order.
  std::vector<std::vector<int>> verification_cones() const;

 private:
  const Fan& fanDagger_;
  const NewtonPolyhedron& P_;
  const Fan& originalFan_;
  const BSet& B_;
  std::vector<int> daggerToOriginalRay_;
  std::vector<int> daggerRayToFacet_;               // facet of P dual to each dagger ray
  std::vector<NewtonPolyhedron> partialCuts_;       // Gamma^{dag, classes <= l}
  std::optional<int> smallest_dagger_cone(const std::vector<int>& rayIdx) const;
};

}  // namespace newtcut
