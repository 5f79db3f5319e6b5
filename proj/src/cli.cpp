#include "newtcut/cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "newtcut/report.hpp"

namespace newtcut {

namespace {

struct CommonArgs {
  std::string poly;
  int n = 0;
  std::string drop;
  std::string mode = "consistent";
  std::vector<long long> primes;
  long long budget = 0;
  unsigned seed = 0;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needsPoly) {
  if (needsPoly) {
    cmd->add_option("--poly", a.poly, "polynomial in x1..xn")->required();
    cmd->add_option("--n", a.n, "number of variables")->required();
  }
  cmd->add_option("--drop", a.drop, "facets to drop: ids \"2,3\", normals \"(4,1,5),(1,0,1)\", or auto");
  cmd->add_option("--mode", a.mode, "consistent|compatible|general")
      ->check(CLI::IsMember({"consistent", "compatible", "general"}));
  cmd->add_option("--prime", a.primes, "oracle prime (repeatable)");
  cmd->add_option("--budget", a.budget, "torus enumeration budget per face and prime");
  cmd->add_option("--seed", a.seed, "permutes the oracle prime order");
  cmd->add_option("--format", a.format, "json|text")->check(CLI::IsMember({"json", "text"}));
}

PipelineOptions options_of(const CommonArgs& a) {
  PipelineOptions opt;
  opt.drop = a.drop;
  if (a.mode == "compatible") opt.mode = BMode::compatible;
  else if (a.mode == "general") opt.mode = BMode::general;
  if (!a.primes.empty()) opt.oracle.primes = a.primes;
  if (a.budget > 0) opt.oracle.budget = a.budget;
  opt.seed = a.seed;
  return opt;
}

void emit(const std::string& sub, const json& report, const std::string& format,
          std::ostream& out) {
  if (format == "json") out << report.dump(2) << "\n";
  else out << render_text(sub, report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton polyhedra, B1-facet cuts, multi-weighted blow-ups and candidate poles"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string strataPath;
  auto* analyze = app.add_subcommand("analyze", "Newton polyhedron, normal fan and facet table");
  add_common(analyze, a, true);
  auto* b1 = app.add_subcommand("b1", "B1 certificates and per-slope decisions");
  add_common(b1, a, true);
  auto* bcut = app.add_subcommand("bcut", "the B-cut polyhedron, its fan, old/new cones");
  add_common(bcut, a, true);
  auto* blowup = app.add_subcommand("blowup", "Cox presentation, proper transform, canonical divisor");
  add_common(blowup, a, true);
  auto* verify = app.add_subcommand("verify", "simple-normal-crossings certificate");
  add_common(verify, a, true);
  auto* poles = app.add_subcommand("poles", "candidate and reduced candidate pole sets");
  add_common(poles, a, true);
  auto* ztop = app.add_subcommand("ztop", "topological zeta function from a strata file");
  ztop->add_option("--strata", strataPath, "strata JSON path")->required();
  ztop->add_option("--format", a.format, "json|text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    json report;
    std::string sub;
    if (ztop->parsed()) {
      sub = "ztop";
      std::ifstream in(strataPath);
      if (!in) throw input_error("cannot open strata file: " + strataPath);
      json raw = json::parse(in, nullptr, true, true);
      report = report_ztop(strata_from_json(raw));
    } else {
      Polynomial f = parse_polynomial(a.poly, a.n);
      PipelineOptions opt = options_of(a);
      if (analyze->parsed()) {
        sub = "analyze";
        report = report_analyze(f);
      } else if (b1->parsed()) {
        sub = "b1";
        report = report_b1(f);
      } else if (bcut->parsed()) {
        sub = "bcut";
        report = report_bcut(f, opt);
      } else if (blowup->parsed()) {
        sub = "blowup";
        report = report_blowup(f, opt);
      } else if (verify->parsed()) {
        sub = "verify";
        report = report_verify(f, opt);
      } else if (poles->parsed()) {
        sub = "poles";
        report = report_poles(f, opt);
      }
    }
    emit(sub, report, a.format, out);
    return report.value("ok", false) ? 0 : 1;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace newtcut
