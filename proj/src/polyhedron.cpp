#include "newtcut/polyhedron.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "newtcut/dd.hpp"

namespace newtcut {

namespace {

std::atomic<std::uint64_t> g_nextId{1};

// Facet inequalities of conv(union of p + orthant), via the homogenization cone
// generated by (1, p) and (0, e_i). Returns (primitive normal, level) pairs.
std::vector<std::pair<IVec, Rat>> hull_facets(const std::vector<QVec>& pts, int n) {
  std::vector<BVec> gens;
  for (const auto& p : pts) {
    QVec row(n + 1);
    row[0] = 1;
    for (int i = 0; i < n; ++i) row[i + 1] = p[i];
    gens.push_back(to_bvec(primitive_of_rational(row)));
  }
  for (int i = 0; i < n; ++i) {
    BVec e(n + 1, 0);
    e[i + 1] = 1;
    gens.push_back(std::move(e));
  }
  std::vector<std::pair<IVec, Rat>> out;
  for (const auto& y : dual_cone_rays(gens)) {
    BVec u(y.begin() + 1, y.end());
    if (is_zero(u)) continue;  // the facet at infinity
    BigInt g = 0;
    for (const auto& x : u) g = boost::multiprecision::gcd(g, x);
    IVec normal(n);
    for (int i = 0; i < n; ++i) normal[i] = checked_ll(u[i] / g);
    Rat level = Rat(-y[0]) / Rat(g);
    if (level < 0) throw internal_error("hull facet with negative level");
    out.emplace_back(std::move(normal), std::move(level));
  }
  return out;
}

// Vertices of the intersection of the half-spaces with the orthant; also checks
// that the recession cone is the full orthant.
std::vector<QVec> hs_vertices(const std::vector<std::pair<IVec, Rat>>& hs, int n) {
  std::vector<BVec> rows;
  for (const auto& [u, N] : hs) {
    QVec row(n + 1);
    row[0] = -N;
    for (int i = 0; i < n; ++i) row[i + 1] = u[i];
    rows.push_back(to_bvec(primitive_of_rational(row)));
  }
  {
    BVec t(n + 1, 0);
    t[0] = 1;
    rows.push_back(std::move(t));
  }
  for (int i = 0; i < n; ++i) {
    BVec e(n + 1, 0);
    e[i + 1] = 1;
    rows.push_back(std::move(e));
  }
  std::vector<QVec> vertices;
  std::set<int> recession;
  for (const auto& z : dual_cone_rays(rows)) {
    if (z[0] > 0) {
      QVec v(n);
      for (int i = 0; i < n; ++i) v[i] = Rat(z[i + 1]) / Rat(z[0]);
      vertices.push_back(std::move(v));
    } else {
      int nz = -1;
      for (int i = 0; i < n; ++i)
        if (z[i + 1] != 0) nz = (nz == -1 && z[i + 1] == 1) ? i : -2;
      if (nz < 0) throw internal_error("recession ray is not a coordinate direction");
      recession.insert(nz);
    }
  }
  if (static_cast<int>(recession.size()) != n)
    throw internal_error("recession cone is not the full orthant");
  return vertices;
}

}  // namespace

Rat NewtonPolyhedron::phi(const IVec& u) const {
  for (auto x : u)
    if (x < 0) throw input_error("phi: negative entry in direction vector");
  Rat best;
  bool first = true;
  for (const auto& v : vertices_) {
    Rat val = dot(v, u);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

Rat NewtonPolyhedron::phi(const QVec& u) const {
  for (const auto& x : u)
    if (x < 0) throw input_error("phi: negative entry in direction vector");
  Rat best;
  bool first = true;
  for (const auto& v : vertices_) {
    Rat val = dot(v, u);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

const Face& NewtonPolyhedron::first_meet_locus(const IVec& u) const {
  Rat value = phi(u);
  std::vector<int> verts;
  for (size_t j = 0; j < vertices_.size(); ++j)
    if (dot(vertices_[j], u) == value) verts.push_back(static_cast<int>(j));
  std::vector<int> rec;
  for (int i = 0; i < n_; ++i)
    if (u[i] == 0) rec.push_back(i);
  // canonical facet set of the face conv(verts) + cone(rec)
  std::vector<int> id;
  for (size_t k = 0; k < facets_.size(); ++k) {
    const auto& f = facets_[k];
    bool all = std::includes(f.vertexIdx.begin(), f.vertexIdx.end(), verts.begin(), verts.end()) &&
               std::includes(f.noncompactDirs.begin(), f.noncompactDirs.end(), rec.begin(),
                             rec.end());
    if (all) id.push_back(static_cast<int>(k));
  }
  auto idx = face_by_facets(id);
  if (!idx) throw internal_error("first_meet_locus: face missing from lattice");
  return faces_[*idx];
}

std::optional<int> NewtonPolyhedron::face_by_facets(const std::vector<int>& facetIdx) const {
  for (const auto& f : faces_)
    if (f.facetIdx == facetIdx) return f.index;
  return std::nullopt;
}

std::optional<int> NewtonPolyhedron::face_of_facet_subset(const std::vector<int>& facetIdx) const {
  std::vector<int> verts;
  for (size_t j = 0; j < vertices_.size(); ++j) verts.push_back(static_cast<int>(j));
  for (int k : facetIdx) {
    const auto& fv = facets_.at(k).vertexIdx;
    std::vector<int> inter;
    std::set_intersection(verts.begin(), verts.end(), fv.begin(), fv.end(),
                          std::back_inserter(inter));
    verts = std::move(inter);
  }
  if (verts.empty()) return std::nullopt;
  std::vector<int> rec;
  for (int i = 0; i < n_; ++i) {
    bool zero = true;
    for (int k : facetIdx)
      if (facets_[k].normal[i] != 0) zero = false;
    if (zero) rec.push_back(i);
  }
  std::vector<int> id;
  for (size_t k = 0; k < facets_.size(); ++k) {
    const auto& f = facets_[k];
    if (std::includes(f.vertexIdx.begin(), f.vertexIdx.end(), verts.begin(), verts.end()) &&
        std::includes(f.noncompactDirs.begin(), f.noncompactDirs.end(), rec.begin(), rec.end()))
      id.push_back(static_cast<int>(k));
  }
  auto idx = face_by_facets(id);
  if (!idx) throw internal_error("face_of_facet_subset: face missing from lattice");
  return idx;
}

std::optional<int> NewtonPolyhedron::intersect_faces(int a, int b) const {
  std::vector<int> joined;
  std::set_union(faces_.at(a).facetIdx.begin(), faces_.at(a).facetIdx.end(),
                 faces_.at(b).facetIdx.begin(), faces_.at(b).facetIdx.end(),
                 std::back_inserter(joined));
  return face_of_facet_subset(joined);
}

bool NewtonPolyhedron::contains(const QVec& point) const {
  for (const auto& x : point)
    if (x < 0) return false;
  for (const auto& f : facets_)
    if (dot(point, f.normal) < f.level) return false;
  return true;
}

bool NewtonPolyhedron::on_facet(const QVec& point, int facet) const {
  return dot(point, facets_.at(facet).normal) == facets_.at(facet).level;
}

void NewtonPolyhedron::finish() {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(facets_.begin(), facets_.end(),
            [](const HalfSpace& a, const HalfSpace& b) { return a.normal < b.normal; });
  trivial_ = true;
  for (auto& f : facets_) {
    if (f.level > 0) trivial_ = false;
    f.vertexIdx.clear();
    f.noncompactDirs.clear();
    for (size_t j = 0; j < vertices_.size(); ++j)
      if (dot(vertices_[j], f.normal) == f.level) f.vertexIdx.push_back(static_cast<int>(j));
    for (int i = 0; i < n_; ++i)
      if (f.normal[i] == 0) f.noncompactDirs.push_back(i);
    if (f.vertexIdx.empty()) throw internal_error("facet without vertices");
  }

  // Face lattice: breadth-first closure of facet-set intersections. A face is
  // the pair (vertex set, recession directions); its canonical key is the set
  // of all facets containing both.
  struct Proto {
    std::vector<int> facets, verts, rec;
  };
  auto close = [&](std::vector<int> verts, std::vector<int> rec) -> Proto {
    Proto p;
    p.verts = std::move(verts);
    p.rec = std::move(rec);
    for (size_t k = 0; k < facets_.size(); ++k) {
      const auto& f = facets_[k];
      if (std::includes(f.vertexIdx.begin(), f.vertexIdx.end(), p.verts.begin(), p.verts.end()) &&
          std::includes(f.noncompactDirs.begin(), f.noncompactDirs.end(), p.rec.begin(),
                        p.rec.end()))
        p.facets.push_back(static_cast<int>(k));
    }
    return p;
  };
  std::vector<int> allVerts, allDirs;
  for (size_t j = 0; j < vertices_.size(); ++j) allVerts.push_back(static_cast<int>(j));
  for (int i = 0; i < n_; ++i) allDirs.push_back(i);
  std::map<std::vector<int>, Proto> found;
  {
    Proto top = close(allVerts, allDirs);
    found[top.facets] = top;
  }
  std::vector<std::vector<int>> queue{found.begin()->first};
  while (!queue.empty()) {
    std::vector<int> key = queue.back();
    queue.pop_back();
    Proto cur = found[key];
    for (size_t k = 0; k < facets_.size(); ++k) {
      if (std::binary_search(cur.facets.begin(), cur.facets.end(), static_cast<int>(k))) continue;
      std::vector<int> verts, rec;
      std::set_intersection(cur.verts.begin(), cur.verts.end(), facets_[k].vertexIdx.begin(),
                            facets_[k].vertexIdx.end(), std::back_inserter(verts));
      if (verts.empty()) continue;
      std::set_intersection(cur.rec.begin(), cur.rec.end(), facets_[k].noncompactDirs.begin(),
                            facets_[k].noncompactDirs.end(), std::back_inserter(rec));
      Proto nxt = close(std::move(verts), std::move(rec));
      if (!found.count(nxt.facets)) {
        found[nxt.facets] = nxt;
        queue.push_back(nxt.facets);
      }
    }
  }

  faces_.clear();
  for (auto& [key, p] : found) {
    Face f;
    f.facetIdx = p.facets;
    f.vertexIdx = p.verts;
    f.noncompactDirs = p.rec;
    std::vector<QVec> normals;
    for (int k : f.facetIdx) normals.push_back(to_qvec(facets_[k].normal));
    f.dim = n_ - (normals.empty() ? 0 : rank(normals));
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.facetIdx) < std::tie(b.dim, b.facetIdx);
  });
  for (size_t i = 0; i < faces_.size(); ++i) {
    faces_[i].index = static_cast<int>(i);
    if (faces_[i].facetIdx.empty()) improperIdx_ = static_cast<int>(i);
  }
  if (improperIdx_ < 0) throw internal_error("improper face missing");

  for (size_t j = 0; j < vertices_.size(); ++j) {
    std::vector<QVec> active;
    for (const auto& f : facets_)
      if (dot(vertices_[j], f.normal) == f.level) active.push_back(to_qvec(f.normal));
    if (rank(active) != n_) throw internal_error("vertex active normals do not span");
  }
}

NewtonPolyhedron polyhedron_from_points(const std::vector<QVec>& pts, int n, int maxDim) {
  if (n < 1) throw input_error("dimension must be at least 1");
  if (n > maxDim) throw input_error("dimension exceeds configured cap");
  if (pts.empty()) throw input_error("empty support");
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != n) throw input_error("point has wrong dimension");
    for (const auto& x : p)
      if (x < 0) throw input_error("support points must be nonnegative");
  }
  NewtonPolyhedron P;
  P.n_ = n;
  P.id_ = g_nextId.fetch_add(1);
  auto hs = hull_facets(pts, n);
  for (auto& [u, N] : hs) P.facets_.push_back(HalfSpace{std::move(u), std::move(N), {}, {}});
  std::vector<std::pair<IVec, Rat>> pairs;
  for (const auto& f : P.facets_) pairs.emplace_back(f.normal, f.level);
  P.vertices_ = hs_vertices(pairs, n);
  P.finish();
  return P;
}

NewtonPolyhedron newton_polyhedron(const std::vector<IVec>& support, int n, int maxDim) {
  std::vector<QVec> pts;
  pts.reserve(support.size());
  for (const auto& a : support) pts.push_back(to_qvec(a));
  return polyhedron_from_points(pts, n, maxDim);
}

NewtonPolyhedron polyhedron_from_halfspaces(const std::vector<std::pair<IVec, Rat>>& hs, int n,
                                            int maxDim) {
  if (n < 1) throw input_error("dimension must be at least 1");
  if (n > maxDim) throw input_error("dimension exceeds configured cap");
  for (const auto& [u, N] : hs) {
    if (static_cast<int>(u.size()) != n) throw input_error("normal has wrong dimension");
    if (is_zero(u)) throw input_error("zero normal");
    if (u != primitive(u)) throw input_error("normal is not primitive");
    for (auto x : u)
      if (x < 0) throw input_error("normal must be nonnegative");
    if (N < 0) throw input_error("negative level");
  }
  NewtonPolyhedron P;
  P.n_ = n;
  P.id_ = g_nextId.fetch_add(1);
  P.vertices_ = hs_vertices(hs, n);
  // re-derive the irredundant facet list from the vertex description
  auto facets = hull_facets(P.vertices_, n);
  for (auto& [u, N] : facets) P.facets_.push_back(HalfSpace{std::move(u), std::move(N), {}, {}});
  P.finish();
  return P;
}

}  // namespace newtcut
