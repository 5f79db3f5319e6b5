#include "newtcut/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace newtcut {

OracleConfig seeded_oracle(const OracleConfig& base, unsigned seed) {
  OracleConfig cfg = base;
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(cfg.primes.begin(), cfg.primes.end(), rng);
  }
  return cfg;
}

namespace {

// "2,3" selects facets by id; "(4,1,5),(1,0,1)" selects them by normal
std::vector<int> parse_facet_ids(const std::string& spec, const NewtonPolyhedron& P) {
  std::vector<int> out;
  if (spec.find('(') != std::string::npos) {
    size_t pos = 0;
    while ((pos = spec.find('(', pos)) != std::string::npos) {
      size_t close = spec.find(')', pos);
      if (close == std::string::npos) throw input_error("unbalanced parenthesis in --drop");
      std::string tuple = spec.substr(pos + 1, close - pos - 1);
      IVec u;
      std::stringstream ts(tuple);
      std::string entry;
      while (std::getline(ts, entry, ',')) u.push_back(std::stoll(entry));
      if (static_cast<int>(u.size()) != P.n()) throw input_error("drop normal has wrong length");
      int match = -1;
      for (size_t k = 0; k < P.facets().size(); ++k)
        if (P.facets()[k].normal == u) match = static_cast<int>(k);
      if (match < 0) throw input_error("drop normal " + to_string(u) + " is not a facet");
      out.push_back(match);
      pos = close + 1;
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    int k = 0;
    try {
      k = std::stoi(entry);
    } catch (const std::exception&) {
      throw input_error("bad --drop entry: " + entry);
    }
    if (k < 0 || k >= static_cast<int>(P.facets().size()))
      throw input_error("drop facet id out of range: " + entry);
    out.push_back(k);
  }
  return out;
}

BChoice choose(const std::vector<int>& facets, const NewtonPolyhedron& P, BMode mode) {
  switch (mode) {
    case BMode::consistent: return choose_consistent(facets, P);
    case BMode::compatible: return choose_compatible(facets, P);
    case BMode::general: return choose_general(facets, P);
  }
  throw internal_error("unknown mode");
}

json facet_table(const NewtonPolyhedron& P) {
  auto certs = detect_b1(P);
  json table = json::array();
  for (size_t k = 0; k < P.facets().size(); ++k) {
    const auto& f = P.facets()[k];
    json row;
    row["id"] = k;
    row["u"] = f.normal;
    row["N"] = rat_to_json(f.level);
    row["absU"] = sum(f.normal);
    if (f.level > 0) {
      row["eta"] = {rat_to_json(f.level), sum(f.normal)};
      row["slope"] = rat_to_json(facet_slope(f));
      row["b1"] = certs.count(k) && !certs[static_cast<int>(k)].empty();
    }
    row["vertexIdx"] = f.vertexIdx;
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace

BChoice resolve_drop(const NewtonPolyhedron& P, const PipelineOptions& opt, json* autoInfo) {
  if (opt.drop.empty()) {
    BChoice c;
    c.accepted = BSet{};
    c.accepted->mode = opt.mode;
    return c;
  }
  if (opt.drop == "auto") {
    RemovableMode rm = (opt.mode == BMode::compatible) ? RemovableMode::compatible_n3
                                                       : RemovableMode::consistent;
    auto removable = removable_slope_classes(P, rm);
    std::vector<int> facets;
    json info = json::array();
    for (const auto& [slope, bset] : removable) {
      facets.insert(facets.end(), bset.facets.begin(), bset.facets.end());
      json e;
      e["slope"] = rat_to_json(slope);
      e["facets"] = bset.facets;
      info.push_back(std::move(e));
    }
    if (autoInfo) *autoInfo = std::move(info);
    return choose(facets, P, opt.mode);
  }
  return choose(parse_facet_ids(opt.drop, P), P, opt.mode);
}

json report_analyze(const Polynomial& f) {
  json j;
  j["ok"] = true;
  j["poly"] = to_string(f);
  j["n"] = f.n;
  NewtonPolyhedron P = newton_polyhedron(f);
  Fan fan = normal_fan(P);
  j["facetTable"] = facet_table(P);
  j["polyhedron"] = to_json(P);
  j["fan"] = to_json(fan);
  return j;
}

json report_b1(const Polynomial& f) {
  json j;
  j["ok"] = true;
  NewtonPolyhedron P = newton_polyhedron(f);
  auto certs = detect_b1(P);
  json jc = json::array();
  for (const auto& [k, list] : certs) {
    json e;
    e["facet"] = k;
    e["b1"] = !list.empty();
    json cl = json::array();
    for (const auto& c : list) cl.push_back(to_json(c));
    e["certificates"] = std::move(cl);
    jc.push_back(std::move(e));
  }
  j["facets"] = std::move(jc);
  json classes = json::array();
  for (const auto& [slope, cls] : slope_classes(P)) {
    json e;
    e["slope"] = rat_to_json(slope);
    e["facets"] = cls;
    bool allB1 = true;
    for (int k : cls)
      if (certs[k].empty()) allB1 = false;
    e["allB1"] = allB1;
    if (allB1) {
      BChoice cons = choose_consistent(cls, P);
      BChoice comp = choose_compatible(cls, P);
      e["consistent"] = cons.ok() ? to_json(*cons.accepted) : to_json(cons.refusal);
      e["consistentAccepted"] = cons.ok();
      e["compatible"] = comp.ok() ? to_json(*comp.accepted) : to_json(comp.refusal);
      e["compatibleAccepted"] = comp.ok();
    }
    classes.push_back(std::move(e));
  }
  j["slopeClasses"] = std::move(classes);
  return j;
}

json report_bcut(const Polynomial& f, const PipelineOptions& opt) {
  json j;
  NewtonPolyhedron P = newton_polyhedron(f);
  Fan fan = normal_fan(P);
  json autoInfo;
  BChoice choice = resolve_drop(P, opt, &autoInfo);
  if (!autoInfo.is_null()) j["autoDrop"] = autoInfo;
  if (!choice.ok()) {
    j["ok"] = false;
    j["refusal"] = to_json(choice.refusal);
    return j;
  }
  j["ok"] = true;
  j["bset"] = to_json(*choice.accepted);
  BCutResult cut = b_cut(P, *choice.accepted);
  j["gammaDagger"] = to_json(cut.polyhedron);
  j["trivial"] = cut.trivial;
  json corr = json::array();
  for (const auto& [a, b] : cut.correspondence) corr.push_back({a, b});
  j["facetCorrespondence"] = std::move(corr);
  Fan fanDagger = normal_fan(cut.polyhedron);
  j["fanDagger"] = to_json(fanDagger);
  ConeClassifier classifier(fanDagger, P, fan, *choice.accepted);
  json cones = json::array();
  for (const auto& rays : classifier.verification_cones()) {
    ConeClassification c = classifier.classify(rays);
    json e;
    e["rayIdx"] = rays;
    json gens = json::array();
    for (int r : rays) gens.push_back(fanDagger.rays[r].gen);
    e["rays"] = std::move(gens);
    e["class"] = c.isOld ? "old" : "new";
    if (c.intersectionFace) e["intersectionFace"] = *c.intersectionFace;
    if (c.classIdx) e["bClass"] = *c.classIdx;
    if (c.baseDirection) e["base"] = *c.baseDirection + 1;
    if (!c.subConeRayIdx.empty()) e["subCone"] = c.subConeRayIdx;
    cones.push_back(std::move(e));
  }
  j["coneTable"] = std::move(cones);
  return j;
}

json report_blowup(const Polynomial& f, const PipelineOptions& opt) {
  json j;
  NewtonPolyhedron P = newton_polyhedron(f);
  json autoInfo;
  BChoice choice = resolve_drop(P, opt, &autoInfo);
  if (!autoInfo.is_null()) j["autoDrop"] = autoInfo;
  if (!choice.ok()) {
    j["ok"] = false;
    j["refusal"] = to_json(choice.refusal);
    return j;
  }
  j["ok"] = true;
  j["bset"] = to_json(*choice.accepted);
  BCutResult cut = b_cut(P, *choice.accepted);
  Fan fanDagger = normal_fan(cut.polyhedron);
  StackPresentation sp = cox_presentation(fanDagger);
  j["presentation"] = to_json(sp);
  TransformedPolynomial fp = proper_transform(f, fanDagger, cut.polyhedron);
  j["properTransform"] = to_json(fp);
  json canon = json::array();
  auto rc = relative_canonical(fanDagger);
  for (size_t i = 0; i < fanDagger.rays.size(); ++i) {
    json e;
    e["ray"] = fanDagger.rays[i].gen;
    e["multiplicity"] = rc[i].first;
    e["nu"] = rc[i].second;
    canon.push_back(std::move(e));
  }
  j["relativeCanonical"] = std::move(canon);
  Fan sub = frugal_simplicial_subdivision(fanDagger);
  json subj;
  subj["fan"] = to_json(sub);
  subj["presentation"] = to_json(cox_presentation(sub));
  j["subdivision"] = std::move(subj);
  return j;
}

json report_verify(const Polynomial& f, const PipelineOptions& opt) {
  json j;
  NewtonPolyhedron P = newton_polyhedron(f);
  json autoInfo;
  BChoice choice = resolve_drop(P, opt, &autoInfo);
  if (!autoInfo.is_null()) j["autoDrop"] = autoInfo;
  if (!choice.ok()) {
    j["ok"] = false;
    j["refusal"] = to_json(choice.refusal);
    return j;
  }
  j["bset"] = to_json(*choice.accepted);
  VerifyConfig cfg;
  cfg.oracle = seeded_oracle(opt.oracle, opt.seed);
  VerifyResult res = verify_desingularization(f, *choice.accepted, cfg);
  j["ok"] = res.certificate.pass;
  j["certificate"] = to_json(res.certificate);
  j["gammaDagger"] = to_json(res.cut.polyhedron);
  j["fanDagger"] = to_json(res.fanDagger);
  j["properTransform"] = to_json(res.properTransform);
  j["reducedPoles"] = to_json(reduced_candidate_poles(P, *choice.accepted));
  return j;
}

json report_poles(const Polynomial& f, const PipelineOptions& opt) {
  json j;
  NewtonPolyhedron P = newton_polyhedron(f);
  j["theta"] = to_json(candidate_poles(P));
  RemovableMode rm = (opt.mode == BMode::compatible) ? RemovableMode::compatible_n3
                                                     : RemovableMode::consistent;
  auto removable = removable_slope_classes(P, rm);
  json rem = json::array();
  for (const auto& [slope, bset] : removable) {
    json e;
    e["slope"] = rat_to_json(slope);
    e["bset"] = to_json(bset);
    rem.push_back(std::move(e));
  }
  j["removableSlopes"] = std::move(rem);
  json autoInfo;
  BChoice choice = resolve_drop(P, opt, &autoInfo);
  if (!autoInfo.is_null()) j["autoDrop"] = autoInfo;
  if (!choice.ok()) {
    j["ok"] = false;
    j["refusal"] = to_json(choice.refusal);
    return j;
  }
  j["ok"] = true;
  if (!choice.accepted->facets.empty()) j["bset"] = to_json(*choice.accepted);
  j["thetaDagger"] = to_json(reduced_candidate_poles(P, *choice.accepted));
  return j;
}

json report_ztop(const std::vector<Stratum>& strata) {
  json j;
  j["ok"] = true;
  RationalFunctionInS z = assemble_topological_zeta(strata);
  j["zeta"] = to_json(z);
  PoleExtraction px = actual_poles(z);
  json poles = json::array();
  for (const auto& p : px.poles) poles.push_back(rat_to_json(p));
  j["actualPoles"] = std::move(poles);
  j["complete"] = px.complete;
  return j;
}

namespace {

std::string pad(const std::string& s, size_t w) {
  return s + std::string(s.size() < w ? w - s.size() : 1, ' ');
}

std::string ivec_str(const json& arr) {
  std::string s = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].dump();
  }
  return s + ")";
}

}  // namespace

std::string render_text(const std::string& subcommand, const json& report) {
  std::ostringstream os;
  if (report.contains("refusal")) {
    os << "refused: " << report["refusal"]["reason"].get<std::string>() << " (facets";
    for (const auto& k : report["refusal"]["blockingFacets"]) os << " " << k;
    os << ")\n";
    return os.str();
  }
  if (subcommand == "analyze") {
    os << pad("id", 4) << pad("u", 14) << pad("N", 8) << pad("|u|", 6) << pad("slope", 10)
       << pad("eta", 12) << "B1\n";
    for (const auto& row : report["facetTable"]) {
      os << pad(row["id"].dump(), 4) << pad(ivec_str(row["u"]), 14)
         << pad(row["N"].get<std::string>(), 8) << pad(row["absU"].dump(), 6);
      if (row.contains("slope"))
        os << pad(row["slope"].get<std::string>(), 10)
           << pad("(" + row["eta"][0].get<std::string>() + "," + row["eta"][1].dump() + ")", 12)
           << (row["b1"].get<bool>() ? "yes" : "no");
      else
        os << pad("-", 10) << pad("-", 12) << "-";
      os << "\n";
    }
    os << "vertices:";
    for (const auto& v : report["polyhedron"]["vertices"]) {
      os << " (";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<std::string>();
      os << ")";
    }
    os << "\n";
    return os.str();
  }
  if (subcommand == "b1") {
    for (const auto& e : report["facets"]) {
      os << "facet " << e["facet"] << ": " << (e["b1"].get<bool>() ? "B1" : "not B1");
      for (const auto& c : e["certificates"])
        os << "  apex=" << ivec_str(c["apex"]) << " base=" << c["base"];
      os << "\n";
    }
    for (const auto& e : report["slopeClasses"]) {
      os << "slope " << e["slope"].get<std::string>() << " facets";
      for (const auto& k : e["facets"]) os << " " << k;
      if (e.contains("consistentAccepted"))
        os << "  consistent=" << (e["consistentAccepted"].get<bool>() ? "yes" : "no")
           << " compatible=" << (e["compatibleAccepted"].get<bool>() ? "yes" : "no");
      os << "\n";
    }
    return os.str();
  }
  if (subcommand == "bcut") {
    os << "dropped facets:";
    for (const auto& k : report["bset"]["facets"]) os << " " << k;
    os << (report["trivial"].get<bool>() ? "  (trivial cut)" : "") << "\n";
    os << "dagger vertices:";
    for (const auto& v : report["gammaDagger"]["vertices"]) {
      os << " (";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<std::string>();
      os << ")";
    }
    os << "\ncones:\n";
    for (const auto& e : report["coneTable"]) {
      os << "  ";
      for (const auto& g : e["rays"]) os << ivec_str(g);
      os << " -> " << e["class"].get<std::string>();
      if (e.contains("base")) os << " base=" << e["base"];
      os << "\n";
    }
    return os.str();
  }
  if (subcommand == "blowup") {
    const auto& sp = report["presentation"];
    os << "variables:";
    for (const auto& v : sp["variables"]) os << " " << v.get<std::string>();
    os << "\npullback:\n";
    for (const auto& p : sp["pullback"]) {
      os << "  " << p["coordinate"].get<std::string>() << " -> ";
      bool any = false;
      for (size_t q = 0; q < p["exponents"].size(); ++q) {
        long long e = p["exponents"][q].get<long long>();
        if (e == 0) continue;
        if (any) os << "*";
        os << sp["variables"][q].get<std::string>();
        if (e > 1) os << "^" << e;
        any = true;
      }
      if (!any) os << "1";
      os << "\n";
    }
    os << "irrelevant ideal: (";
    bool firstGen = true;
    for (const auto& g : sp["irrelevantGenerators"]) {
      if (!firstGen) os << ", ";
      firstGen = false;
      for (size_t i = 0; i < g.size(); ++i) os << (i ? "*" : "") << g[i].get<std::string>();
    }
    os << ")\nproper transform: " << report["properTransform"]["rendered"].get<std::string>()
       << "\n";
    return os.str();
  }
  if (subcommand == "verify") {
    const auto& cert = report["certificate"];
    os << (cert["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& o : cert["orbits"]) {
      os << "  orbit";
      for (const auto& g : o["coneRays"]) os << " " << ivec_str(g);
      os << ": " << o["class"].get<std::string>() << ", case " << o["case"].get<std::string>()
         << ", " << o["verdict"].get<std::string>();
      if (o["detail"].contains("witness"))
        os << " (witness " << o["detail"]["witness"].get<std::string>() << ")";
      os << "\n";
    }
    os << "numerical data:";
    for (const auto& nd : cert["numericalData"])
      os << " (" << nd[0].dump() << "," << nd[1].dump() << ")";
    os << "\nreduced poles:";
    for (const auto& v : report["reducedPoles"]["values"]) os << " " << v.get<std::string>();
    os << "\n";
    return os.str();
  }
  if (subcommand == "poles") {
    os << "theta:";
    for (const auto& v : report["theta"]["values"]) os << " " << v.get<std::string>();
    os << "\nremovable slopes:";
    for (const auto& e : report["removableSlopes"]) os << " " << e["slope"].get<std::string>();
    if (report.contains("thetaDagger")) {
      os << "\ntheta-dagger:";
      for (const auto& v : report["thetaDagger"]["values"]) os << " " << v.get<std::string>();
    }
    os << "\n";
    return os.str();
  }
  if (subcommand == "ztop") {
    os << report["zeta"]["rendered"].get<std::string>() << "\n";
    os << "poles:";
    for (const auto& p : report["actualPoles"]) os << " " << p.get<std::string>();
    os << "\n";
    return os.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace newtcut
