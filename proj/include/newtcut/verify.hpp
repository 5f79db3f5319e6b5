#pragma once

#include "newtcut/b1.hpp"
#include "newtcut/blowup.hpp"
#include "newtcut/nondegeneracy.hpp"

namespace newtcut {

/// Verification record for one torus orbit above the origin.
struct OrbitRecord {
  std::vector<int> rayIdx;          // cone rays in the dagger fan
  std::vector<IVec> rayGens;
  bool isOld = false;
  char caseTag = 'A';
  bool pass = false;
  // Case A
  std::optional<int> faceIdx;       // intersection face in Gamma_+(f)
  std::optional<NondegeneracyVerdict> oracle;
  // Case B
  std::optional<int> baseDirection;              // 1-based in reports
  std::optional<IVec> witnessSource;             // exponent of the linear witness term
  std::string witnessMonomial;                   // rendered restriction witness
  std::vector<IVec> residualSources;             // offending terms on failure
  std::string note;
};

struct SNCCertificate {
  bool pass = false;
  std::vector<OrbitRecord> orbits;
  std::vector<std::pair<long long, long long>> numericalData;
};

struct VerifyConfig {
  OracleConfig oracle;
};

struct VerifyResult {
  SNCCertificate certificate;
  NewtonPolyhedron gammaPlus;
  Fan fan;                 // normal fan of Gamma_+(f)
  BCutResult cut;          // dagger polyhedron + correspondence
  Fan fanDagger;
  TransformedPolynomial properTransform;
};

/// Machine check that the multi-weighted blow-up along the B-cut of
/// Gamma_+(f) desingularizes f above the origin: Case A nondegeneracy on old
/// orbits, the unit-derivative shape on new ones.
VerifyResult verify_desingularization(const Polynomial& f, const BSet& B,
                                      const VerifyConfig& config = {});

}  // namespace newtcut
