#include "newtcut/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "newtcut/dd.hpp"

namespace newtcut {

int Fan::ray_by_gen(const IVec& gen) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i].gen == gen) return static_cast<int>(i);
  return -1;
}

const Cone* Fan::cone_by_rays(const std::vector<int>& rayIdx) const {
  for (const auto& c : cones)
    if (c.rayIdx == rayIdx) return &c;
  return nullptr;
}

Fan normal_fan(const NewtonPolyhedron& P) {
  Fan fan;
  fan.n = P.n();
  fan.sourcePolyId = P.id();
  for (size_t k = 0; k < P.facets().size(); ++k) {
    Ray r;
    r.gen = P.facets()[k].normal;
    r.dualFacet = static_cast<int>(k);
    r.standard = (sum(r.gen) == 1);
    fan.rays.push_back(std::move(r));
  }
  for (const auto& face : P.faces()) {
    Cone c;
    c.rayIdx = face.facetIdx;  // ray k is dual to facet k
    c.dim = P.n() - face.dim;
    c.dualFace = face.index;
    fan.cones.push_back(std::move(c));
    if (face.dim == 0) fan.maximal.push_back(static_cast<int>(fan.cones.size()) - 1);
  }
  fan.simplicial = true;
  for (int m : fan.maximal)
    if (static_cast<int>(fan.cones[m].rayIdx.size()) != fan.n) fan.simplicial = false;
  for (int i = 0; i < fan.n; ++i) {
    IVec e(fan.n, 0);
    e[i] = 1;
    if (fan.ray_by_gen(e) < 0) throw internal_error("normal fan is missing a standard ray");
  }
  return fan;
}

const Face& dual_face(const Fan& fan, const NewtonPolyhedron& P, int coneIdx) {
  if (!fan.sourcePolyId || *fan.sourcePolyId != P.id())
    throw input_error("dual_face: fan was not built from this polyhedron");
  const Cone& c = fan.cones.at(coneIdx);
  if (!c.dualFace) throw input_error("dual_face: cone carries no duality link");
  return P.face(*c.dualFace);
}

const Cone& dual_cone(const Fan& fan, const NewtonPolyhedron& P, const Face& face) {
  if (!fan.sourcePolyId || *fan.sourcePolyId != P.id())
    throw input_error("dual_cone: fan was not built from this polyhedron");
  for (const auto& c : fan.cones)
    if (c.dualFace && *c.dualFace == face.index) return c;
  throw input_error("dual_cone: face not found in fan");
}

std::vector<std::pair<int, int>> ray_adjacency(const Fan& fan) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& c : fan.cones) {
    if (c.dim != 2) continue;
    if (c.rayIdx.size() != 2) throw internal_error("2-cone with unexpected ray count");
    pairs.emplace(c.rayIdx[0], c.rayIdx[1]);
  }
  return {pairs.begin(), pairs.end()};
}

std::optional<int> inscribed(const std::vector<int>& rayIdx, const Fan& fan) {
  std::optional<int> best;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    if (!std::includes(c.rayIdx.begin(), c.rayIdx.end(), rayIdx.begin(), rayIdx.end())) continue;
    if (!best || c.dim < fan.cones[*best].dim) best = static_cast<int>(i);
  }
  if (best) {
    // the minimal inscribing cone is unique: its rays sit inside every candidate
    for (size_t i = 0; i < fan.cones.size(); ++i) {
      const auto& c = fan.cones[i];
      if (!std::includes(c.rayIdx.begin(), c.rayIdx.end(), rayIdx.begin(), rayIdx.end())) continue;
      if (!std::includes(c.rayIdx.begin(), c.rayIdx.end(), fan.cones[*best].rayIdx.begin(),
                         fan.cones[*best].rayIdx.end()))
        throw internal_error("inscribed: minimal cone is not unique");
    }
  }
  return best;
}

Fan frugal_simplicial_subdivision(const Fan& fan) {
  std::vector<std::vector<int>> maxSets;
  for (int m : fan.maximal) maxSets.push_back(fan.cones[m].rayIdx);

  std::vector<int> order(fan.rays.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return fan.rays[a].gen < fan.rays[b].gen; });

  for (int r : order) {
    std::set<std::vector<int>> next;
    for (const auto& S : maxSets) {
      if (!std::binary_search(S.begin(), S.end(), r)) {
        next.insert(S);
        continue;
      }
      std::vector<IVec> gens;
      gens.reserve(S.size());
      for (int i : S) gens.push_back(fan.rays[i].gen);
      std::vector<QVec> qgens;
      for (const auto& g : gens) qgens.push_back(to_qvec(g));
      std::vector<std::vector<int>> localFacets;
      if (rank(qgens) == static_cast<int>(S.size())) {
        // simplicial: facets drop one generator each
        for (size_t skip = 0; skip < S.size(); ++skip) {
          std::vector<int> F;
          for (size_t pos = 0; pos < S.size(); ++pos)
            if (pos != skip) F.push_back(static_cast<int>(pos));
          localFacets.push_back(std::move(F));
        }
      } else {
        localFacets = cone_facets(gens);
      }
      for (const auto& localFacet : localFacets) {
        std::vector<int> F;
        F.reserve(localFacet.size() + 1);
        for (int pos : localFacet) F.push_back(S[pos]);
        if (std::binary_search(F.begin(), F.end(), r)) continue;
        F.push_back(r);
        std::sort(F.begin(), F.end());
        next.insert(std::move(F));
      }
    }
    maxSets.assign(next.begin(), next.end());
  }

  Fan out;
  out.n = fan.n;
  out.rays = fan.rays;
  out.simplicial = true;
  std::set<std::vector<int>> allCones;
  for (const auto& S : maxSets) {
    std::vector<QVec> gens;
    for (int i : S) gens.push_back(to_qvec(fan.rays[i].gen));
    if (rank(gens) != static_cast<int>(S.size()))
      throw internal_error("pulling produced a non-simplicial cone");
    // faces of a simplicial cone are exactly the ray subsets
    for (std::uint32_t mask = 0; mask < (1u << S.size()); ++mask) {
      std::vector<int> sub;
      for (size_t b = 0; b < S.size(); ++b)
        if (mask & (1u << b)) sub.push_back(S[b]);
      allCones.insert(sub);
    }
  }
  for (const auto& set : allCones) {
    Cone c;
    c.rayIdx = set;
    c.dim = static_cast<int>(set.size());
    out.cones.push_back(std::move(c));
  }
  for (const auto& S : maxSets) {
    for (size_t i = 0; i < out.cones.size(); ++i)
      if (out.cones[i].rayIdx == S) out.maximal.push_back(static_cast<int>(i));
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

bool cone_contains(const Fan& fan, const std::vector<int>& rayIdx, const QVec& point) {
  if (rayIdx.empty()) {
    for (const auto& x : point)
      if (x != 0) return false;
    return true;
  }
  std::vector<QVec> gens;
  gens.reserve(rayIdx.size());
  for (int i : rayIdx) gens.push_back(to_qvec(fan.rays[i].gen));
  const int r = rank(gens);
  if (r == static_cast<int>(gens.size())) {
    QVec coeff;
    if (!solve(gens, point, coeff)) return false;
    for (const auto& c : coeff)
      if (c < 0) return false;
    return true;
  }
  if (r == fan.n) {
    std::vector<BVec> rows;
    for (int i : rayIdx) rows.push_back(to_bvec(fan.rays[i].gen));
    for (const auto& h : dual_cone_rays(rows)) {
      Rat s = 0;
      for (int i = 0; i < fan.n; ++i) s += point[i] * Rat(h[i]);
      if (s < 0) return false;
    }
    return true;
  }
  // lower-dimensional non-simplicial cone: Caratheodory over independent subsets
  std::vector<int> idx(rayIdx.begin(), rayIdx.end());
  std::uint32_t full = 1u << idx.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<QVec> sub;
    for (size_t b = 0; b < idx.size(); ++b)
      if (mask & (1u << b)) sub.push_back(to_qvec(fan.rays[idx[b]].gen));
    if (static_cast<int>(sub.size()) > r) continue;
    if (rank(sub) != static_cast<int>(sub.size())) continue;
    QVec coeff;
    if (!solve(sub, point, coeff)) continue;
    bool ok = true;
    for (const auto& c : coeff)
      if (c < 0) ok = false;
    if (ok) return true;
  }
  return false;
}

std::optional<int> maximal_cone_containing(const Fan& fan, const QVec& point) {
  for (int m : fan.maximal)
    if (cone_contains(fan, fan.cones[m].rayIdx, point)) return m;
  return std::nullopt;
}

}  // namespace newtcut
