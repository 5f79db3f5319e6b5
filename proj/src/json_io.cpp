#include "newtcut/json_io.hpp"

namespace newtcut {

json rat_to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw input_error("expected a rational as \"p/q\"");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

static json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rat_to_json(q));
  return a;
}

json to_json(const NewtonPolyhedron& P) {
  json j;
  j["n"] = P.n();
  j["trivial"] = P.trivial();
  j["vertices"] = json::array();
  for (const auto& v : P.vertices()) j["vertices"].push_back(qvec_to_json(v));
  j["facets"] = json::array();
  for (const auto& f : P.facets()) {
    json jf;
    jf["u"] = f.normal;
    jf["N"] = rat_to_json(f.level);
    jf["vertexIdx"] = f.vertexIdx;
    jf["noncompactDirs"] = f.noncompactDirs;
    j["facets"].push_back(std::move(jf));
  }
  j["faces"] = json::array();
  for (const auto& f : P.faces()) {
    json jf;
    jf["facetIdx"] = f.facetIdx;
    jf["dim"] = f.dim;
    jf["vertexIdx"] = f.vertexIdx;
    jf["noncompactDirs"] = f.noncompactDirs;
    j["faces"].push_back(std::move(jf));
  }
  return j;
}

json to_json(const Fan& fan) {
  json j;
  j["rays"] = json::array();
  for (const auto& r : fan.rays) j["rays"].push_back(r.gen);
  j["cones"] = json::array();
  for (const auto& c : fan.cones) {
    json jc;
    jc["rayIdx"] = c.rayIdx;
    jc["dim"] = c.dim;
    if (c.dualFace) jc["dualFace"] = *c.dualFace;
    j["cones"].push_back(std::move(jc));
  }
  j["maximal"] = fan.maximal;
  j["simplicial"] = fan.simplicial;
  return j;
}

json to_json(const B1Certificate& c) {
  json j;
  j["facet"] = c.facet;
  j["apex"] = c.apex;
  j["base"] = c.base + 1;  // 1-based in reports
  return j;
}

json to_json(const BSet& B) {
  json j;
  j["facets"] = B.facets;
  switch (B.mode) {
    case BMode::consistent: j["mode"] = "consistent"; break;
    case BMode::compatible: j["mode"] = "compatible"; break;
    case BMode::general: j["mode"] = "general"; break;
  }
  j["certificates"] = json::array();
  for (const auto& [k, c] : B.chosen) j["certificates"].push_back(to_json(c));
  j["classes"] = json::array();
  for (size_t i = 0; i < B.classes.size(); ++i) {
    json jc;
    jc["facets"] = B.classes[i];
    if (B.classApex[i]) jc["apex"] = *B.classApex[i];
    if (B.classBase[i]) jc["base"] = *B.classBase[i] + 1;
    j["classes"].push_back(std::move(jc));
  }
  return j;
}

json to_json(const Refusal& r) {
  json j;
  j["reason"] = r.reason;
  j["blockingFacets"] = r.blockingFacets;
  return j;
}

json to_json(const NondegeneracyVerdict& v) {
  json j;
  j["face"] = v.face;
  j["method"] = v.method == NondegeneracyVerdict::Method::exact_low_dim
                    ? "exact-low-dim"
                    : "finite-field-sampling";
  j["primes"] = v.primes;
  switch (v.verdict) {
    case Verdict::nondegenerate: j["verdict"] = "nondegenerate"; break;
    case Verdict::degenerate: j["verdict"] = "degenerate"; break;
    case Verdict::probably_nondegenerate: j["verdict"] = "probably-nondegenerate"; break;
  }
  if (v.witness) {
    j["witness"]["prime"] = v.witness->prime;
    j["witness"]["point"] = v.witness->point;
  }
  return j;
}

json to_json(const StackPresentation& sp) {
  json j;
  j["n"] = sp.n;
  j["variables"] = sp.variableNames;
  j["exceptional"] = sp.exceptional;
  j["beta"] = json::array();
  for (const auto& row : sp.beta) j["beta"].push_back(row);
  j["weights"] = json::array();
  for (const auto& row : sp.weights) j["weights"].push_back(row);
  j["irrelevantGenerators"] = json::array();
  for (const auto& g : sp.irrelevantGenerators) {
    json names = json::array();
    for (int p : g) names.push_back(sp.variableNames[p]);
    j["irrelevantGenerators"].push_back(std::move(names));
  }
  j["pullback"] = json::array();
  for (int i = 0; i < sp.n; ++i) {
    json jp;
    jp["coordinate"] = "x" + std::to_string(i + 1);
    jp["exponents"] = sp.pullback[i];
    j["pullback"].push_back(std::move(jp));
  }
  j["charts"] = json::array();
  for (const auto& ch : sp.charts) {
    json jc;
    jc["coneRays"] = ch.rayIdx;
    json inv = json::array();
    for (int p : ch.invertedVariables) inv.push_back(sp.variableNames[p]);
    jc["invertedMonomial"] = std::move(inv);
    if (ch.group) {
      json factors = json::array();
      for (const auto& d : ch.group->invariantFactors) factors.push_back(d.str());
      jc["group"]["invariantFactors"] = std::move(factors);
      jc["group"]["order"] = ch.group->order.str();
    }
    j["charts"].push_back(std::move(jc));
  }
  return j;
}

json to_json(const TransformedPolynomial& fp) {
  json j;
  j["variables"] = fp.variableNames;
  j["raySubtracted"] = fp.raySubtracted;
  j["terms"] = json::array();
  for (const auto& t : fp.terms) {
    json jt;
    jt["coeff"] = rat_to_json(t.coeff);
    jt["exponents"] = t.exponents;
    jt["source"] = t.source;
    j["terms"].push_back(std::move(jt));
  }
  j["rendered"] = fp.render();
  return j;
}

json to_json(const SNCCertificate& cert) {
  json j;
  j["pass"] = cert.pass;
  j["orbits"] = json::array();
  for (const auto& o : cert.orbits) {
    json jo;
    jo["cone"] = o.rayIdx;
    json gens = json::array();
    for (const auto& g : o.rayGens) gens.push_back(g);
    jo["coneRays"] = std::move(gens);
    jo["class"] = o.isOld ? "old" : "new";
    jo["case"] = std::string(1, o.caseTag);
    jo["verdict"] = o.pass ? "pass" : "fail";
    json detail;
    if (o.faceIdx) detail["face"] = *o.faceIdx;
    if (o.oracle) detail["oracle"] = to_json(*o.oracle);
    if (o.baseDirection) detail["base"] = *o.baseDirection;
    if (o.witnessSource) detail["apexTerm"] = *o.witnessSource;
    if (!o.witnessMonomial.empty()) detail["witness"] = o.witnessMonomial;
    if (!o.residualSources.empty()) {
      json res = json::array();
      for (const auto& s : o.residualSources) res.push_back(s);
      detail["residualTerms"] = std::move(res);
    }
    if (!o.note.empty()) detail["note"] = o.note;
    jo["detail"] = std::move(detail);
    j["orbits"].push_back(std::move(jo));
  }
  j["numericalData"] = json::array();
  for (const auto& [N, nu] : cert.numericalData) j["numericalData"].push_back({N, nu});
  return j;
}

json to_json(const PoleSet& ps) {
  json j;
  j["values"] = json::array();
  for (const auto& v : ps.values) j["values"].push_back(rat_to_json(v));
  j["provenance"] = json::array();
  for (const auto& [s, facets] : ps.provenance) {
    json jp;
    jp["slope"] = rat_to_json(s);
    if (facets.empty()) jp["source"] = "-1 constant";
    else jp["facets"] = facets;
    j["provenance"].push_back(std::move(jp));
  }
  return j;
}

json to_json(const RationalFunctionInS& z) {
  json j;
  json num = json::array(), den = json::array();
  for (const auto& c : z.num.c) num.push_back(c.str());
  for (const auto& c : z.den.c) den.push_back(c.str());
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  j["rendered"] = render(z);
  return j;
}

std::pair<std::vector<std::pair<IVec, Rat>>, int> polyhedron_halfspaces_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<IVec, Rat>> hs;
  for (const auto& jf : j.at("facets"))
    hs.emplace_back(jf.at("u").get<IVec>(), rat_from_json(jf.at("N")));
  return {hs, n};
}

Fan fan_from_json(const json& j, int n) {
  Fan fan;
  fan.n = n;
  for (const auto& jg : j.at("rays")) {
    Ray r;
    r.gen = jg.get<IVec>();
    r.standard = sum(r.gen) == 1;
    fan.rays.push_back(std::move(r));
  }
  for (const auto& jc : j.at("cones")) {
    Cone c;
    c.rayIdx = jc.at("rayIdx").get<std::vector<int>>();
    c.dim = jc.at("dim").get<int>();
    if (jc.contains("dualFace")) c.dualFace = jc.at("dualFace").get<int>();
    fan.cones.push_back(std::move(c));
  }
  fan.maximal = j.at("maximal").get<std::vector<int>>();
  fan.simplicial = j.at("simplicial").get<bool>();
  return fan;
}

std::vector<Stratum> strata_from_json(const json& j) {
  if (!j.is_array()) throw input_error("strata file must contain an array");
  std::vector<Stratum> out;
  for (const auto& js : j) {
    Stratum st;
    st.chi = js.at("chi").get<long long>();
    for (const auto& jd : js.at("divisors")) {
      if (!jd.is_array() || jd.size() != 2) throw input_error("divisor datum must be [N, nu]");
      st.divisors.emplace_back(jd[0].get<long long>(), jd[1].get<long long>());
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace newtcut
