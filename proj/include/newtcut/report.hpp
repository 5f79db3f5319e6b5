#pragma once

#include "newtcut/json_io.hpp"

namespace newtcut {

struct PipelineOptions {
  std::string drop;  // "", "auto", facet ids "1,2", or normals "4,1,5;1,0,1"
  BMode mode = BMode::consistent;
  OracleConfig oracle;
  unsigned seed = 0;  // permutes the oracle prime order
};

OracleConfig seeded_oracle(const OracleConfig& base, unsigned seed);

/// Resolves a --drop specification against the facets of P.
BChoice resolve_drop(const NewtonPolyhedron& P, const PipelineOptions& opt, json* autoInfo);

json report_analyze(const Polynomial& f);
json report_b1(const Polynomial& f);
json report_bcut(const Polynomial& f, const PipelineOptions& opt);
json report_blowup(const Polynomial& f, const PipelineOptions& opt);
json report_verify(const Polynomial& f, const PipelineOptions& opt);
json report_poles(const Polynomial& f, const PipelineOptions& opt);
json report_ztop(const std::vector<Stratum>& strata);

std::string render_text(const std::string& subcommand, const json& report);

}  // namespace newtcut
