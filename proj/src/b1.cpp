#include "newtcut/b1.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace newtcut {

int BSet::class_of(int facet) const {
  for (size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), facet) != classes[c].end())
      return static_cast<int>(c);
  return -1;
}

Rat facet_slope(const HalfSpace& f) {
  if (f.level <= 0) throw input_error("slope undefined for level-0 facet");
  return -Rat(sum(f.normal)) / f.level;
}

bool facets_adjacent(const NewtonPolyhedron& P, int a, int b) {
  auto face = P.face_of_facet_subset({std::min(a, b), std::max(a, b)});
  return face && P.face(*face).dim == P.n() - 2;
}

std::map<int, std::vector<B1Certificate>> detect_b1(const NewtonPolyhedron& P) {
  std::map<int, std::vector<B1Certificate>> out;
  for (size_t k = 0; k < P.facets().size(); ++k) {
    const auto& f = P.facets()[k];
    if (f.level <= 0) continue;
    std::vector<B1Certificate> certs;
    for (int vj : f.vertexIdx) {
      const QVec& v = P.vertices()[vj];
      bool lattice = true;
      IVec vi(P.n());
      for (int i = 0; i < P.n(); ++i) {
        if (boost::multiprecision::denominator(v[i]) != 1) lattice = false;
        else vi[i] = checked_ll(boost::multiprecision::numerator(v[i]));
      }
      if (!lattice) continue;  // B1 requires a lattice apex
      for (int i = 0; i < P.n(); ++i) {
        if (vi[i] != 1) continue;
        if (f.normal[i] == 0) continue;       // not compact in direction i
        if (f.vertexIdx.size() < 2) continue; // the base H_i meets the facet in a facet of it
        bool othersOnHi = true;
        for (int wj : f.vertexIdx)
          if (wj != vj && P.vertices()[wj][i] != 0) othersOnHi = false;
        if (othersOnHi) certs.push_back(B1Certificate{static_cast<int>(k), vi, i});
      }
    }
    out.emplace(static_cast<int>(k), std::move(certs));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency_classes(const std::vector<int>& facets,
                                                const NewtonPolyhedron& P) {
  std::vector<int> parent(facets.size());
  for (size_t i = 0; i < facets.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = i + 1; j < facets.size(); ++j)
      if (facets_adjacent(P, facets[i], facets[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < facets.size(); ++i) groups[find(static_cast<int>(i))].push_back(facets[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_b1_members(const std::vector<int>& facets, const NewtonPolyhedron& P,
                         const std::map<int, std::vector<B1Certificate>>& certs) {
  for (int k : facets) {
    if (k < 0 || k >= static_cast<int>(P.facets().size())) throw input_error("unknown facet index");
    if (P.facets()[k].level <= 0) throw input_error("facet has level 0");
    auto it = certs.find(k);
    if (it == certs.end() || it->second.empty())
      throw input_error("facet " + std::to_string(k) + " is not a B1-facet");
  }
}

}  // namespace

BChoice choose_consistent(const std::vector<int>& facetsIn, const NewtonPolyhedron& P) {
  std::vector<int> facets = facetsIn;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto certs = detect_b1(P);
  validate_b1_members(facets, P, certs);

  BSet B;
  B.facets = facets;
  B.mode = BMode::consistent;
  B.classes = adjacency_classes(facets, P);
  BChoice out;
  for (const auto& cls : B.classes) {
    // candidate directions shared by every member of the class
    std::set<int> common;
    bool first = true;
    for (int k : cls) {
      std::set<int> dirs;
      for (const auto& c : certs[k]) dirs.insert(c.base);
      if (first) {
        common = dirs;
        first = false;
      } else {
        std::set<int> inter;
        std::set_intersection(common.begin(), common.end(), dirs.begin(), dirs.end(),
                              std::inserter(inter, inter.begin()));
        common = inter;
      }
    }
    if (common.empty()) {
      out.refusal.reason = "no consistent base direction for an adjacency class";
      out.refusal.blockingFacets = cls;
      return out;
    }
    // cross-check the apex characterization: a shared direction comes with a
    // shared apex across the class
    std::optional<int> chosenDir;
    std::optional<IVec> chosenApex;
    for (int dir : common) {
      std::optional<IVec> apex;
      bool ok = true;
      for (int k : cls) {
        std::optional<IVec> mine;
        for (const auto& c : certs[k])
          if (c.base == dir) mine = c.apex;
        if (!mine) ok = false;
        else if (!apex) apex = mine;
        else if (*apex != *mine) ok = false;
      }
      if (ok) {
        chosenDir = dir;
        chosenApex = apex;
        break;  // directions iterate in ascending order
      }
    }
    if (!chosenDir)
      throw internal_error("consistent class admits no common apex");
    for (int k : cls)
      for (const auto& c : certs[k])
        if (c.base == *chosenDir) B.chosen[k] = c;
    B.classApex.push_back(chosenApex);
    B.classBase.push_back(chosenDir);
  }
  out.accepted = std::move(B);
  return out;
}

BChoice choose_compatible(const std::vector<int>& facetsIn, const NewtonPolyhedron& P) {
  std::vector<int> facets = facetsIn;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto certs = detect_b1(P);
  validate_b1_members(facets, P, certs);

  // adjacency restricted to the chosen facets
  std::vector<std::vector<bool>> adj(facets.size(), std::vector<bool>(facets.size(), false));
  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = i + 1; j < facets.size(); ++j)
      adj[i][j] = adj[j][i] = facets_adjacent(P, facets[i], facets[j]);

  std::vector<B1Certificate> choice(facets.size());
  std::function<bool(size_t)> search = [&](size_t pos) -> bool {
    if (pos == facets.size()) return true;
    for (const auto& cand : certs[facets[pos]]) {
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev)
        if (adj[prev][pos] && choice[prev].apex == cand.apex && choice[prev].base != cand.base)
          ok = false;
      if (!ok) continue;
      choice[pos] = cand;
      if (search(pos + 1)) return true;
    }
    return false;
  };

  BChoice out;
  if (!search(0)) {
    out.refusal.reason = "no compatible apex assignment";
    out.refusal.blockingFacets = facets;
    return out;
  }
  BSet B;
  B.facets = facets;
  B.mode = BMode::compatible;
  B.classes = adjacency_classes(facets, P);
  for (size_t i = 0; i < facets.size(); ++i) B.chosen[facets[i]] = choice[i];
  B.classApex.assign(B.classes.size(), std::nullopt);
  B.classBase.assign(B.classes.size(), std::nullopt);
  out.accepted = std::move(B);
  return out;
}

BChoice choose_general(const std::vector<int>& facetsIn, const NewtonPolyhedron& P) {
  std::vector<int> facets = facetsIn;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  BChoice out;
  for (int k : facets) {
    if (k < 0 || k >= static_cast<int>(P.facets().size())) throw input_error("unknown facet index");
    if (sum(P.facets()[k].normal) == 1) {
      out.refusal.reason = "facet lies in a translate of a coordinate hyperplane";
      out.refusal.blockingFacets = {k};
      return out;
    }
  }
  BSet B;
  B.facets = facets;
  B.mode = BMode::general;
  B.classes = adjacency_classes(facets, P);
  B.classApex.assign(B.classes.size(), std::nullopt);
  B.classBase.assign(B.classes.size(), std::nullopt);
  out.accepted = std::move(B);
  return out;
}

std::map<Rat, std::vector<int>> slope_classes(const NewtonPolyhedron& P) {
  std::map<Rat, std::vector<int>> out;
  for (size_t k = 0; k < P.facets().size(); ++k)
    if (P.facets()[k].level > 0)
      out[facet_slope(P.facets()[k])].push_back(static_cast<int>(k));
  return out;
}

BCutResult b_cut(const NewtonPolyhedron& P, const BSet& B) {
  for (int k : B.facets) {
    if (k < 0 || k >= static_cast<int>(P.facets().size())) throw input_error("unknown facet index");
    if (sum(P.facets()[k].normal) == 1)
      throw input_error("b_cut: facet lies in a translate of a coordinate hyperplane");
  }
  std::vector<std::pair<IVec, Rat>> kept;
  std::vector<int> keptIdx;
  for (size_t k = 0; k < P.facets().size(); ++k) {
    if (std::binary_search(B.facets.begin(), B.facets.end(), static_cast<int>(k))) continue;
    kept.emplace_back(P.facets()[k].normal, P.facets()[k].level);
    keptIdx.push_back(static_cast<int>(k));
  }
  BCutResult res{polyhedron_from_halfspaces(kept, P.n()), {}, false};
  res.trivial = res.polyhedron.trivial();

  // facet correspondence: the retained half-spaces are exactly the dagger facets
  std::set<IVec> daggerNormals;
  for (const auto& f : res.polyhedron.facets()) daggerNormals.insert(f.normal);
  for (int k : keptIdx) {
    const IVec& u = P.facets()[k].normal;
    int match = -1;
    for (size_t m = 0; m < res.polyhedron.facets().size(); ++m)
      if (res.polyhedron.facets()[m].normal == u) {
        if (res.polyhedron.facets()[m].level != P.facets()[k].level)
          throw internal_error("b_cut: retained facet changed level");
        match = static_cast<int>(m);
      }
    if (match < 0) throw internal_error("b_cut: retained facet vanished from the cut");
    res.correspondence.emplace_back(k, match);
  }
  if (res.polyhedron.facets().size() != res.correspondence.size())
    throw internal_error("b_cut: facet correspondence is not a bijection");
  return res;
}

ConeClassifier::ConeClassifier(const Fan& fanDagger, const NewtonPolyhedron& P,
                               const Fan& originalFan, const BSet& B)
    : fanDagger_(fanDagger), P_(P), originalFan_(originalFan), B_(B) {
  daggerToOriginalRay_.resize(fanDagger.rays.size());
  daggerRayToFacet_.resize(fanDagger.rays.size());
  for (size_t i = 0; i < fanDagger.rays.size(); ++i) {
    int orig = originalFan.ray_by_gen(fanDagger.rays[i].gen);
    if (orig < 0) throw internal_error("dagger ray missing from the original fan");
    daggerToOriginalRay_[i] = orig;
    if (!originalFan.rays[orig].dualFacet)
      throw internal_error("original fan ray without dual facet");
    daggerRayToFacet_[i] = *originalFan.rays[orig].dualFacet;
  }
  // partial cuts Gamma^{dag, classes <= l}, used to assign classes to new cones
  for (size_t l = 0; l < B.classes.size(); ++l) {
    std::vector<int> dropped;
    for (size_t j = 0; j <= l; ++j)
      dropped.insert(dropped.end(), B.classes[j].begin(), B.classes[j].end());
    std::sort(dropped.begin(), dropped.end());
    std::vector<std::pair<IVec, Rat>> kept;
    for (size_t k = 0; k < P.facets().size(); ++k)
      if (!std::binary_search(dropped.begin(), dropped.end(), static_cast<int>(k)))
        kept.emplace_back(P.facets()[k].normal, P.facets()[k].level);
    partialCuts_.push_back(polyhedron_from_halfspaces(kept, P.n()));
  }
}

std::optional<int> ConeClassifier::smallest_dagger_cone(const std::vector<int>& rayIdx) const {
  return inscribed(rayIdx, fanDagger_);
}

std::vector<std::vector<int>> ConeClassifier::verification_cones() const {
  std::set<std::vector<int>> seen;
  for (int m : fanDagger_.maximal) {
    const auto& S = fanDagger_.cones[m].rayIdx;
    if (S.size() >= 25)
      throw input_error("maximal cone too large for orbit enumeration");
    for (std::uint32_t mask = 1; mask < (1u << S.size()); ++mask) {
      std::vector<int> sub;
      for (size_t b = 0; b < S.size(); ++b)
        if (mask & (1u << b)) sub.push_back(S[b]);
      // skip cones inside a coordinate hyperplane
      bool covers = true;
      for (int i = 0; i < fanDagger_.n && covers; ++i) {
        bool some = false;
        for (int r : sub)
          if (fanDagger_.rays[r].gen[i] > 0) some = true;
        if (!some) covers = false;
      }
      if (covers) seen.insert(std::move(sub));
    }
  }
  return {seen.begin(), seen.end()};
}

ConeClassification ConeClassifier::classify(const std::vector<int>& rayIdx) const {
  ConeClassification out;
  out.rayIdx = rayIdx;

  // criterion 1: intersection of the dual facets in the original polyhedron
  std::vector<int> facetSet;
  for (int r : rayIdx) facetSet.push_back(daggerRayToFacet_[r]);
  std::sort(facetSet.begin(), facetSet.end());
  facetSet.erase(std::unique(facetSet.begin(), facetSet.end()), facetSet.end());
  auto interFace = P_.face_of_facet_subset(facetSet);

  // criterion 2: inscribability in the original fan
  std::vector<int> origRays;
  for (int r : rayIdx) origRays.push_back(daggerToOriginalRay_[r]);
  std::sort(origRays.begin(), origRays.end());
  auto ins = inscribed(origRays, originalFan_);

  if (interFace.has_value() != ins.has_value()) {
    std::string s;
    for (int r : rayIdx) s += to_string(fanDagger_.rays[r].gen);
    throw internal_error("old/new criteria disagree on cone " + s);
  }

  out.isOld = interFace.has_value();
  if (out.isOld) {
    out.intersectionFace = interFace;
    return out;
  }

  // New cone. Its class comes from the smallest dagger cone it is inscribed
  // in: the first partial cut into whose normal fan that cone is inscribable.
  auto smallest = smallest_dagger_cone(rayIdx);
  if (!smallest) throw internal_error("verification cone not inscribable in the dagger fan");
  const std::vector<int>& hostRays = fanDagger_.cones[*smallest].rayIdx;

  std::optional<int> classIdx;
  for (size_t l = 0; l < partialCuts_.size() && !classIdx; ++l) {
    const auto& cut = partialCuts_[l];
    std::vector<int> cutFacets;
    for (int r : hostRays) {
      const IVec& u = fanDagger_.rays[r].gen;
      int m = -1;
      for (size_t q = 0; q < cut.facets().size(); ++q)
        if (cut.facets()[q].normal == u) m = static_cast<int>(q);
      if (m < 0) throw internal_error("dagger ray missing from a partial cut");
      cutFacets.push_back(m);
    }
    if (cut.face_of_facet_subset(cutFacets).has_value()) classIdx = static_cast<int>(l);
  }
  if (!classIdx) throw internal_error("new cone not inscribable even in the full cut");
  out.classIdx = classIdx;

  if (B_.classBase.at(*classIdx)) {
    int base = *B_.classBase[*classIdx];
    out.baseDirection = base;
    IVec e(fanDagger_.n, 0);
    e[base] = 1;
    int baseRay = fanDagger_.ray_by_gen(e);
    if (baseRay < 0) throw internal_error("base direction ray missing from dagger fan");
    if (!std::binary_search(rayIdx.begin(), rayIdx.end(), baseRay))
      throw internal_error("base ray is not an extremal ray of the new cone");
    out.baseRay = baseRay;
    for (int r : rayIdx)
      if (r != baseRay) out.subConeRayIdx.push_back(r);
  }
  return out;
}

}  // namespace newtcut
