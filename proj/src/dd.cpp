#include "newtcut/dd.hpp"

#include <algorithm>
#include <set>

namespace newtcut {

namespace {

struct DDRay {
  BVec v;
  std::vector<int> active;  // indices of processed rows met with equality, sorted
};

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<BVec> dual_cone_rays(std::vector<BVec> rows) {
  if (rows.empty()) throw internal_error("dual_cone_rays: no rows");
  const size_t d = rows[0].size();
  for (auto& r : rows) make_primitive(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  // pick d linearly independent rows for the initial simplicial cone
  std::vector<QVec> ech;
  std::vector<int> basis;
  for (size_t i = 0; i < rows.size() && basis.size() < d; ++i) {
    std::vector<QVec> trial = ech;
    QVec row(rows[i].begin(), rows[i].end());
    trial.push_back(row);
    if (rank(trial) > static_cast<int>(ech.size())) {
      ech.push_back(row);
      basis.push_back(static_cast<int>(i));
    }
  }
  if (basis.size() < d) throw internal_error("dual_cone_rays: cone is not pointed");

  // process basis rows first, the rest afterwards
  std::vector<int> order = basis;
  for (size_t i = 0; i < rows.size(); ++i)
    if (std::find(basis.begin(), basis.end(), static_cast<int>(i)) == basis.end())
      order.push_back(static_cast<int>(i));

  // initial rays: solutions of basisMatrix * r = e_j, scaled to primitive integers
  std::vector<QVec> basisCols(d, QVec(d));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < d; ++i) basisCols[j][i] = Rat(rows[basis[i]][j]);
  std::vector<DDRay> rays;
  for (size_t j = 0; j < d; ++j) {
    QVec rhs(d, Rat(0)), sol;
    rhs[j] = 1;
    if (!solve(basisCols, rhs, sol)) throw internal_error("dual_cone_rays: singular basis");
    DDRay ray;
    ray.v = to_bvec(primitive_of_rational(sol));
    for (size_t i = 0; i < d; ++i)
      if (i != j) ray.active.push_back(static_cast<int>(i));
    rays.push_back(std::move(ray));
  }

  // adjacency: the rows active at both rays must cut a (d-2)-dimensional face
  auto adjacent = [&](const DDRay& a, const DDRay& b) {
    std::vector<int> common = intersect_sorted(a.active, b.active);
    if (common.size() + 2 < d) return false;
    std::vector<QVec> sel;
    sel.reserve(common.size());
    for (int k : common) {
      const BVec& r = rows[order[k]];
      sel.emplace_back(r.begin(), r.end());
    }
    return rank(sel) == static_cast<int>(d) - 2;
  };

  for (size_t step = d; step < order.size(); ++step) {
    const BVec& g = rows[order[step]];
    std::vector<BigInt> val(rays.size());
    bool anyNeg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(g, rays[i].v);
      if (val[i] < 0) anyNeg = true;
    }
    if (!anyNeg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].active.push_back(static_cast<int>(step));
      continue;
    }
    std::vector<DDRay> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) next.push_back(rays[i]);
      if (val[i] == 0) {
        next.push_back(rays[i]);
        next.back().active.push_back(static_cast<int>(step));
      }
    }
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        if (!adjacent(rays[i], rays[j])) continue;
        DDRay nr;
        nr.v.resize(d);
        for (size_t k = 0; k < d; ++k) nr.v[k] = val[i] * rays[j].v[k] - val[j] * rays[i].v[k];
        make_primitive(nr.v);
        nr.active = intersect_sorted(rays[i].active, rays[j].active);
        nr.active.push_back(static_cast<int>(step));
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<BVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& generators) {
  std::vector<BVec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(to_bvec(g));
  std::vector<BVec> normals = dual_cone_rays(rows);
  std::set<std::vector<int>> facets;
  for (const auto& h : normals) {
    std::vector<int> on;
    for (size_t i = 0; i < generators.size(); ++i)
      if (dot(h, to_bvec(generators[i])) == 0) on.push_back(static_cast<int>(i));
    facets.insert(on);
  }
  return {facets.begin(), facets.end()};
}

}  // namespace newtcut
