#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gamma_sharp/analysis.hpp"
#include "gamma_sharp/embedded.hpp"
#include "gamma_sharp/error.hpp"
#include "gamma_sharp/grid.hpp"
#include "gamma_sharp/json_io.hpp"
#include "gamma_sharp/oracle.hpp"

using namespace gamma_sharp;

namespace {

constexpr int kExitAgree = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Options {
  long precision = kDefaultPrecision;
  std::string output;
  std::string format = "json";
  bool midpoint = false;

  std::string family;
  int k = -1;
  std::string x;
  std::string grid;
  int lambda = 0;
  int theorem = 0;
  int truncation = 0;
  bool experimental = false;
  bool emit_cpp = false;
  bool theta = false;
  std::string shift;
  int grid_points = 40;
  bool no_certificates = false;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool is_interval(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("lo") && j.contains("hi") && j.contains("width");
}

std::string midpoint_text(const Json& j) {
  const std::string lo = j["lo"], hi = j["hi"];
  const Precision p = static_cast<Precision>(std::max(lo.size(), hi.size()) * 4 + 64);
  BigFloat a(p), b(p);
  mpfr_set_str(a.get(), lo.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(b.get(), hi.c_str(), 10, MPFR_RNDU);
  return render(Interval(a, b));
}

void print_human(std::ostream& os, const Json& j, const std::string& path) {
  if (is_interval(j)) {
    os << path << ": " << midpoint_text(j) << "\n";
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_human(os, it.value(), path.empty() ? it.key() : path + "." + it.key());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_human(os, j[i], path + "[" + std::to_string(i) + "]");
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

class Output {
 public:
  explicit Output(const Options& o) : opts_(o) {
    if (!o.output.empty()) {
      file_.open(o.output);
      if (!file_) throw Error(ErrorCode::kUsage, "cannot write " + o.output);
    }
  }
  std::ostream& stream() { return opts_.output.empty() ? std::cout : file_; }

  void document(const std::string& command, const Json& config, const Json& result) {
    Json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config;
    doc["result"] = result;
    doc["timestamp"] = timestamp();
    if (opts_.midpoint) {
      print_human(stream(), result, "");
    } else {
      stream() << doc.dump(2) << "\n";
    }
  }

 private:
  const Options& opts_;
  std::ofstream file_;
};

Json base_config(const Options& o) {
  return {{"precision", o.precision}, {"format", o.format}};
}

ApproxFamily require_approx_family(const std::string& name) {
  auto f = parse_approx_family(name);
  if (!f) throw Error(ErrorCode::kUsage, "unknown family '" + name + "'");
  return *f;
}

ApproximantDef approximant_from(const Options& o) {
  const ApproxFamily f = require_approx_family(o.family);
  int k = o.k;
  if (f == ApproxFamily::kRamanujanMixed1 && k < 0) k = 1;
  if (is_corrected(f) && k < 0) throw Error(ErrorCode::kUsage, o.family + " needs --k");
  return make_approximant(f, k);
}

std::vector<Rational> grid_or(const Options& o, const std::string& fallback) {
  return parse_grid(o.grid.empty() ? fallback : o.grid);
}

std::string csv_interval(const Interval& iv) {
  const Json j = json_of(iv);
  return j["lo"].get<std::string>() + "," + j["hi"].get<std::string>();
}

int cmd_derive(const Options& o, Output& out) {
  auto fam = parse_family(o.family);
  if (!fam) throw Error(ErrorCode::kUsage, "unknown correction family '" + o.family + "'");
  if (o.k < 0) throw Error(ErrorCode::kUsage, "--k is required");
  DeriveOptions d;
  d.truncation = o.truncation;
  d.experimental = o.experimental;
  const DerivationRecord rec = derive_family(*fam, o.k, d);
  Json config = base_config(o);
  config["family"] = family_cli_name(*fam);
  config["k"] = o.k;
  config["truncation"] = rec.truncation;
  config["experimental"] = o.experimental;
  out.document("derive", config, json_of(rec));
  return kExitAgree;
}

int cmd_constants(const Options& o, Output& out) {
  std::vector<Family> fams;
  if (o.family.empty()) {
    fams = {Family::kGosperCF, Family::kGosperProduct, Family::kRamanujanCF, Family::kRamanujanMixed};
  } else {
    auto fam = parse_family(o.family);
    if (!fam) throw Error(ErrorCode::kUsage, "unknown correction family '" + o.family + "'");
    fams = {*fam};
  }
  if (o.emit_cpp) {
    std::vector<DerivationRecord> recs;
    for (Family f : fams) recs.push_back(derive_family(f, max_published_depth(f)));
    out.stream() << emit_constants_source(recs);
    return kExitAgree;
  }
  Json result = Json::object();
  for (Family f : fams) result[std::string(family_id(f))] = embedded_constant_strings(f);
  Json config = base_config(o);
  config["family"] = o.family.empty() ? Json("all") : Json(o.family);
  out.document("constants", config, result);
  return kExitAgree;
}

int cmd_eval(const Options& o, Output& out) {
  const ApproximantDef def = approximant_from(o);
  if (o.x.empty()) throw Error(ErrorCode::kUsage, "--x is required");
  const Rational x = parse_rational(o.x);
  const Precision p = o.precision;
  Json result = {{"approximant", json_of(def)},
                 {"x", json_of(x)},
                 {"correctionValue", json_of(correction_value(def, x))},
                 {"lnA", json_of(log_approx(def, x, p))},
                 {"A", json_of(eval_approx(def, x, p))}};
  const ResidualSample r = residual(def, x, p);
  result["E"] = json_of(r.E);
  result["relE"] = json_of(r.relE);
  Json config = base_config(o);
  config["family"] = o.family;
  config["k"] = def.k;
  config["x"] = to_string(x);
  out.document("eval", config, result);
  return kExitAgree;
}

int cmd_table(const Options& o, Output& out) {
  const auto grid = grid_or(o, "1:10:linear:10");
  std::vector<ApproximantDef> defs;
  if (o.family.empty() || o.family == "all") {
    defs = all_approximants();
  } else {
    defs = {approximant_from(o)};
  }
  const Precision p = o.precision;
  if (o.format == "csv") {
    out.stream() << "x,gamma_lo,gamma_hi";
    for (const auto& def : defs) out.stream() << "," << def.name() << "_lo," << def.name() << "_hi";
    out.stream() << "\n";
    for (const auto& x : grid) {
      out.stream() << to_string(x) << "," << csv_interval(oracle_gamma(x + 1, p));
      for (const auto& def : defs) out.stream() << "," << csv_interval(eval_approx(def, x, p));
      out.stream() << "\n";
    }
    return kExitAgree;
  }
  Json rows = Json::array();
  for (const auto& def : defs) {
    for (const auto& x : grid) {
      rows.push_back({{"approximant", def.name()},
                      {"x", json_of(x)},
                      {"A", json_of(eval_approx(def, x, p))},
                      {"gamma", json_of(oracle_gamma(x + 1, p))},
                      {"relE", json_of(residual(def, x, p).relE)}});
    }
  }
  Json config = base_config(o);
  config["family"] = o.family.empty() ? "all" : o.family;
  config["grid"] = o.grid.empty() ? "1:10:linear:10" : o.grid;
  out.document("table", config, rows);
  return kExitAgree;
}

int cmd_residual(const Options& o, Output& out) {
  const ApproximantDef def = approximant_from(o);
  const auto grid = grid_or(o, "1:10000:log10:9");
  std::vector<ResidualSample> samples;
  for (const auto& x : grid) samples.push_back(residual(def, x, o.precision));
  if (o.format == "csv") {
    out.stream() << "x,E_lo,E_hi,relE_lo,relE_hi\n";
    for (const auto& s : samples) out.stream() << to_string(s.x) << "," << csv_interval(s.E) << "," << csv_interval(s.relE) << "\n";
    return kExitAgree;
  }
  Json rows = Json::array();
  for (const auto& s : samples) rows.push_back(json_of(s));
  Json config = base_config(o);
  config["family"] = o.family;
  config["k"] = def.k;
  config["grid"] = o.grid.empty() ? "1:10000:log10:9" : o.grid;
  out.document("residual", config, {{"approximant", json_of(def)}, {"samples", rows}});
  return kExitAgree;
}

int cmd_rate(const Options& o, Output& out) {
  const ApproximantDef def = approximant_from(o);
  if (o.lambda < 2) throw Error(ErrorCode::kUsage, "--lambda must be at least 2");
  const std::string g = o.grid.empty() ? "125:1000:pow2" : o.grid;
  const RateReport r = mortici_estimate(def, o.lambda, parse_grid(g), o.precision);
  const bool ok = r.converged && r.limit_relative_error <= 0.01;
  if (o.format == "csv") {
    out.stream() << "x,f_lo,f_hi,scaled_lo,scaled_hi,scaledE_lo,scaledE_hi\n";
    for (const auto& s : r.samples) {
      out.stream() << to_string(s.x) << "," << csv_interval(s.f) << "," << csv_interval(s.scaled) << ","
                   << csv_interval(s.scaled_e) << "\n";
    }
    return ok ? kExitAgree : kExitDisagree;
  }
  Json config = base_config(o);
  config["family"] = o.family;
  config["k"] = def.k;
  config["lambda"] = o.lambda;
  config["grid"] = g;
  Json result = json_of(r);
  result["limitMagnitudeWithin1Percent"] = r.limit_relative_error <= 0.01;
  out.document("rate", config, result);
  return ok ? kExitAgree : kExitDisagree;
}

int cmd_verify(const Options& o, Output& out) {
  if (o.theorem < 1 || o.theorem > 4) throw Error(ErrorCode::kUsage, "--theorem must be 1..4");
  std::vector<int> ks;
  if (o.k >= 0) {
    ks = {o.k};
  } else {
    for (int k = 0; k <= 3; ++k) {
      if (theorem_has_depth(o.theorem, k)) ks.push_back(k);
    }
  }
  std::vector<InequalityReport> reports;
  for (int k : ks) {
    const Rational start = theorem_domain_start(o.theorem, k);
    const auto grid = o.grid.empty() ? make_grid(start, Rational(10000), GridScheme::kLog10, 40) : parse_grid(o.grid);
    reports.push_back(verify_inequality(o.theorem, k, grid, o.precision));
  }
  int code = kExitAgree;
  for (const auto& r : reports) {
    if (r.observed == Direction::kUndecided) {
      code = kExitInconclusive;
    } else if (!r.agrees && code == kExitAgree) {
      code = kExitDisagree;
    }
  }
  if (o.format == "csv") {
    out.stream() << "theorem,k,x,direction,printed,margin_lo,margin_hi,precision\n";
    for (const auto& r : reports) {
      for (const auto& s : r.samples) {
        out.stream() << r.theorem << "," << r.k << "," << to_string(s.x) << "," << direction_name(s.direction) << ","
                     << direction_name(r.printed) << "," << csv_interval(s.margin) << "," << s.precision << "\n";
      }
    }
    return code;
  }
  Json rows = Json::array();
  for (const auto& r : reports) rows.push_back(json_of(r));
  Json config = base_config(o);
  config["theorem"] = o.theorem;
  config["k"] = o.k >= 0 ? Json(o.k) : Json("all");
  config["grid"] = o.grid.empty() ? Json("domainStart:10000:log10:40") : Json(o.grid);
  out.document("verify", config, {{"reports", rows}});
  return code;
}

int cmd_certify(const Options& o, Output& out) {
  if (o.theorem < 1 || o.theorem > 4) throw Error(ErrorCode::kUsage, "--theorem must be 1..4");
  const int k = o.theorem == 4 && o.k < 0 ? 1 : o.k;
  const ApproximantDef def = theorem_approximant(o.theorem, k);
  const Rational a = o.shift.empty() ? def.valid_domain : parse_rational(o.shift);
  const RationalFunction f2 = second_difference_rational(*def.constants, k);
  const PositivityCertificate cert = positivity_certificate(f2, a);
  const Conclusion c = telescoping_conclusion(cert);
  const Direction printed = printed_direction(o.theorem, k);
  Json config = base_config(o);
  config["theorem"] = o.theorem;
  config["k"] = k;
  config["shift"] = to_string(a);
  out.document("certify", config,
               {{"approximant", def.name()},
                {"certificate", json_of(cert)},
                {"conclusion", json_of(c)},
                {"printedDirection", direction_name(printed)},
                {"agrees", c.direction == printed}});
  if (c.direction == Direction::kUndecided) return kExitInconclusive;
  return c.direction == printed ? kExitAgree : kExitDisagree;
}

int cmd_oracle(const Options& o, Output& out) {
  if (o.x.empty()) throw Error(ErrorCode::kUsage, "--x is required");
  const Rational x = parse_rational(o.x);
  Json result = {{"x", json_of(x)}};
  if (o.theta) {
    result["theta"] = json_of(theta_probe(x, o.precision));
  } else {
    LnGammaMethod m;
    result["lnGamma"] = json_of(oracle_lngamma(x, o.precision, &m));
    result["gamma"] = json_of(oracle_gamma(x, o.precision));
    result["method"] = json_of(m);
  }
  Json config = base_config(o);
  config["x"] = to_string(x);
  config["theta"] = o.theta;
  out.document("oracle", config, result);
  return kExitAgree;
}

int cmd_report(const Options& o, Output& out) {
  ReportOptions r;
  r.precision = o.precision;
  r.grid_points = o.grid_points;
  r.certificates = !o.no_certificates;
  const DiscrepancyReport rep = discrepancy_report(r);
  Json config = base_config(o);
  config["gridPoints"] = o.grid_points;
  config["certificates"] = r.certificates;
  out.document("report", config, json_of(rep));
  return rep.all_agree ? kExitAgree : kExitDisagree;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kUsage:
    case ErrorCode::kDomain:
    case ErrorCode::kPole: return kExitUsage;
    default: return kExitInconclusive;
  }
}

long default_precision() {
  if (const char* env = std::getenv("GAMMA_SHARP_PRECISION")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      return -1;
    }
  }
  return kDefaultPrecision;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.precision = default_precision();
  CLI::App app{"gamma_sharp: multiple-correction approximations of the gamma function"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-p,--precision", o.precision, "working precision in bits (env GAMMA_SHARP_PRECISION)");
  app.add_option("-o,--output", o.output, "write output to a file");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--midpoint", o.midpoint, "human-readable midpoints instead of JSON");

  auto add_family = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--family", o.family, "formula family");
    if (required) opt->required();
  };
  auto* derive = app.add_subcommand("derive", "solve correction constants");
  add_family(derive, true);
  derive->add_option("--k", o.k, "depth")->required();
  derive->add_option("--truncation", o.truncation, "series truncation order");
  derive->add_flag("--experimental", o.experimental, "allow depth beyond the published cap");

  auto* constants = app.add_subcommand("constants", "print embedded constants");
  add_family(constants, false);
  constants->add_flag("--emit-cpp", o.emit_cpp, "emit the generated constants source");

  auto* eval = app.add_subcommand("eval", "evaluate an approximant");
  add_family(eval, true);
  eval->add_option("--k", o.k, "depth");
  eval->add_option("--x", o.x, "point")->required();

  auto* table = app.add_subcommand("table", "approximants against the oracle on a grid");
  add_family(table, false);
  table->add_option("--k", o.k, "depth");
  table->add_option("--grid", o.grid, "start:stop:scheme[:count]");

  auto* resid = app.add_subcommand("residual", "E(x) on a grid");
  add_family(resid, true);
  resid->add_option("--k", o.k, "depth");
  resid->add_option("--grid", o.grid, "start:stop:scheme[:count]");

  auto* rate = app.add_subcommand("rate", "limit estimation from E(x) - E(x+1)");
  add_family(rate, true);
  rate->add_option("--k", o.k, "depth");
  rate->add_option("--lambda", o.lambda, "order of the difference")->required();
  rate->add_option("--grid", o.grid, "start:stop:scheme[:count]");

  auto* verify = app.add_subcommand("verify", "sampled inequality check");
  verify->add_option("--theorem", o.theorem, "1..4")->required();
  verify->add_option("--k", o.k, "depth (all when omitted)");
  verify->add_option("--grid", o.grid, "start:stop:scheme[:count]");

  auto* certify = app.add_subcommand("certify", "sign certificate for the second difference");
  certify->add_option("--theorem", o.theorem, "1..4")->required();
  certify->add_option("--k", o.k, "depth");
  certify->add_option("--shift", o.shift, "certificate start (domain start by default)");

  auto* oracle = app.add_subcommand("oracle", "ln Gamma(x) and Gamma(x) enclosures");
  oracle->add_option("--x", o.x, "point")->required();
  oracle->add_flag("--theta", o.theta, "Ramanujan remainder parameter instead");

  auto* report = app.add_subcommand("report", "printed claims against derived and measured values");
  report->add_option("--grid-points", o.grid_points, "points per inequality grid");
  report->add_flag("--no-certificates", o.no_certificates, "skip second-difference certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (o.precision < 32 || o.precision > 1 << 20) throw Error(ErrorCode::kUsage, "precision must be in [32, 2^20]");
    if (o.k < -1) throw Error(ErrorCode::kUsage, "--k must be non-negative");
    Output out(o);
    if (*derive) return cmd_derive(o, out);
    if (*constants) return cmd_constants(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*table) {
      if (o.format == "json" && !app.get_option("--format")->count()) o.format = "csv";
      return cmd_table(o, out);
    }
    if (*resid) return cmd_residual(o, out);
    if (*rate) return cmd_rate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*report) return cmd_report(o, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitUsage;
}
