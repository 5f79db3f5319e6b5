#include "newtcut/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace newtcut {

namespace {

// Case B criterion along sigma-minus-base: no constant part in the base
// variable, exactly one linear term, everything else divisible by its square.
struct CaseBOutcome {
  bool pass = false;
  std::optional<IVec> witnessSource;
  std::string witnessMonomial;
  std::vector<IVec> residuals;
};

CaseBOutcome case_b_shape(const TransformedPolynomial& restricted, int basePosition) {
  CaseBOutcome out;
  std::vector<const TransformedPolynomial::Term*> constant, linear, rest;
  for (const auto& t : restricted.terms) {
    long long e = t.exponents[basePosition];
    if (e == 0) constant.push_back(&t);
    else if (e == 1) linear.push_back(&t);
    else rest.push_back(&t);
  }
  if (!constant.empty() || linear.size() != 1) {
    for (const auto* t : constant) out.residuals.push_back(t->source);
    for (const auto* t : linear) out.residuals.push_back(t->source);
    return out;
  }
  out.pass = true;
  out.witnessSource = linear[0]->source;
  TransformedPolynomial w = restricted;
  w.terms = {*linear[0]};
  out.witnessMonomial = w.render();
  return out;
}

}  // namespace

VerifyResult verify_desingularization(const Polynomial& f, const BSet& Bin,
                                      const VerifyConfig& config) {
  validate_oracle_config(f, config.oracle);
  VerifyResult res;
  res.gammaPlus = newton_polyhedron(f);
  res.fan = normal_fan(res.gammaPlus);
  for (int k : Bin.facets)
    if (k < 0 || k >= static_cast<int>(res.gammaPlus.facets().size()))
      throw input_error("verify: B refers to an unknown facet");
  // a compatible-mode set has to be re-validated through the consistent
  // chooser, which supplies the class base directions Case B runs on
  BSet B = Bin;
  if (Bin.mode == BMode::compatible) {
    BChoice again = choose_consistent(Bin.facets, res.gammaPlus);
    if (!again.ok())
      throw input_error(
          "verify: compatible-mode set is not consistent; rerun with --mode general to check "
          "it empirically");
    B = *again.accepted;
  }
  res.cut = b_cut(res.gammaPlus, B);
  res.fanDagger = normal_fan(res.cut.polyhedron);
  res.properTransform = proper_transform(f, res.fanDagger, res.cut.polyhedron);

  ConeClassifier classifier(res.fanDagger, res.gammaPlus, res.fan, B);

  // chosen base directions, for the general-mode candidate search
  std::set<int> chosenBases;
  for (const auto& base : B.classBase)
    if (base) chosenBases.insert(*base);

  std::map<int, NondegeneracyVerdict> oracleCache;  // by face index in Gamma_+(f)

  SNCCertificate cert;
  cert.pass = true;
  for (const auto& coneRays : classifier.verification_cones()) {
    OrbitRecord rec;
    rec.rayIdx = coneRays;
    for (int r : coneRays) rec.rayGens.push_back(res.fanDagger.rays[r].gen);
    ConeClassification cls = classifier.classify(coneRays);
    rec.isOld = cls.isOld;

    if (cls.isOld) {
      rec.caseTag = 'A';
      const Face& face = res.gammaPlus.face(*cls.intersectionFace);
      if (!face.compact())
        throw internal_error("old verification cone meets a noncompact face");
      rec.faceIdx = face.index;
      auto it = oracleCache.find(face.index);
      if (it == oracleCache.end()) {
        Polynomial g = face_polynomial(f, res.gammaPlus, face);
        NondegeneracyVerdict v = check_face_nondegeneracy(g, face.dim, config.oracle);
        v.face = face.index;
        it = oracleCache.emplace(face.index, std::move(v)).first;
      }
      rec.oracle = it->second;
      rec.pass = it->second.pass();
      // cross-check: the orbit restriction of f' matches the face polynomial
      TransformedPolynomial restricted = orbit_restriction(res.properTransform, coneRays);
      std::set<IVec> restrictedSupport, faceSupport;
      for (const auto& t : restricted.terms) restrictedSupport.insert(t.source);
      for (const auto& [a, c] : face_polynomial(f, res.gammaPlus, face).terms)
        faceSupport.insert(a);
      if (restrictedSupport != faceSupport)
        throw internal_error("orbit restriction disagrees with the face polynomial");
    } else {
      rec.caseTag = 'B';
      // candidate base rays: the class base first, then any chosen direction
      std::vector<int> candidates;
      if (cls.baseDirection) candidates.push_back(*cls.baseDirection);
      for (int b : chosenBases)
        if (std::find(candidates.begin(), candidates.end(), b) == candidates.end())
          candidates.push_back(b);
      if (B.mode == BMode::general) {
        for (int r : coneRays)
          if (res.fanDagger.rays[r].standard) {
            int b = -1;
            for (int i = 0; i < f.n; ++i)
              if (res.fanDagger.rays[r].gen[i] == 1) b = i;
            if (std::find(candidates.begin(), candidates.end(), b) == candidates.end())
              candidates.push_back(b);
          }
      }
      CaseBOutcome last;
      for (int b : candidates) {
        IVec e(f.n, 0);
        e[b] = 1;
        int baseRay = res.fanDagger.ray_by_gen(e);
        if (baseRay < 0) continue;
        if (!std::binary_search(coneRays.begin(), coneRays.end(), baseRay)) continue;
        std::vector<int> subCone;
        for (int r : coneRays)
          if (r != baseRay) subCone.push_back(r);
        TransformedPolynomial restricted = orbit_restriction(res.properTransform, subCone);
        int basePos = -1;
        for (size_t p = 0; p < restricted.rayOrder.size(); ++p)
          if (restricted.rayOrder[p] == baseRay) basePos = static_cast<int>(p);
        CaseBOutcome outcome = case_b_shape(restricted, basePos);
        if (outcome.pass) {
          rec.baseDirection = b + 1;
          rec.pass = true;
          rec.witnessSource = outcome.witnessSource;
          rec.witnessMonomial = outcome.witnessMonomial;
          if (B.mode != BMode::general) {
            // with a B1 base direction the coordinate facet has level 0, so the
            // base exponent is the raw coordinate: every support point of the
            // sub-cone face sits at height >= 1, and above 1 except the apex
            if (restricted.raySubtracted[basePos] != 0)
              throw internal_error("base coordinate facet has nonzero level");
            for (const auto& t : restricted.terms) {
              if (t.source[b] < 1)
                throw internal_error("support point below the base hyperplane on a new cone");
              if (t.source != *outcome.witnessSource && t.source[b] < 2)
                throw internal_error("non-apex support point at base height 1 on a new cone");
            }
          }
          break;
        }
        last = outcome;
      }
      if (!rec.pass) {
        rec.residualSources = last.residuals;
        rec.note = "no base direction yields the unit-derivative shape";
      }
    }
    if (!rec.pass) cert.pass = false;
    cert.orbits.push_back(std::move(rec));
  }

  cert.numericalData = numerical_data(res.fanDagger, res.gammaPlus);
  // Theorem-level identity: the numerical data is (1,1) plus the retained
  // positive-level facet data
  {
    std::set<std::pair<long long, long long>> expected;
    expected.emplace(1, 1);
    for (size_t k = 0; k < res.gammaPlus.facets().size(); ++k) {
      if (std::binary_search(B.facets.begin(), B.facets.end(), static_cast<int>(k))) continue;
      const auto& fc = res.gammaPlus.facets()[k];
      if (fc.level <= 0) continue;
      expected.emplace(checked_ll(boost::multiprecision::numerator(fc.level)),
                       sum(fc.normal));
    }
    std::set<std::pair<long long, long long>> got(cert.numericalData.begin(),
                                                  cert.numericalData.end());
    if (got != expected)
      throw internal_error("numerical data disagrees with the retained facet data");
  }
  res.certificate = std::move(cert);
  return res;
}

}  // namespace newtcut
