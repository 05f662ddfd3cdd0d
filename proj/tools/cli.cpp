#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "einstein_cyl/classify.hpp"
#include "einstein_cyl/curvature.hpp"
#include "einstein_cyl/error.hpp"
#include "einstein_cyl/reparam.hpp"

namespace ecyl::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

json num(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string num17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const ModelParams& p) { return {{"a", sign_of(p.a)}, {"C", num(p.C)}, {"lambda", num(p.lambda)}}; }

json to_json(const SInterval& s) { return {{"lo", num(s.lo)}, {"hi", num(s.hi)}}; }

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, SInterval>) return to_json(*v);
  else return *v;
}

json to_json(const EndpointReport& e) {
  return {{"s", num(e.s)},         {"end", std::string(to_string(e.end))},
          {"t", num(e.t)},         {"kind", std::string(to_string(e.kind))},
          {"n", opt(e.n)},         {"df_dt", num(e.df_dt)},
          {"dh_dt", num(e.dh_dt)}, {"h", num(e.h)},
          {"note", e.note}};
}

json to_json(const std::vector<EndpointReport>& ends) {
  json out = json::array();
  for (const auto& e : ends) out.push_back(to_json(e));
  return out;
}

json to_json(const ClassificationRecord& r) {
  return {{"case_id", r.case_id},
          {"params", to_json(r.params)},
          {"input", to_json(r.input)},
          {"s_interval", opt(r.s_interval)},
          {"input_interval", opt(r.input_interval)},
          {"complete", r.complete},
          {"smooth", r.smooth},
          {"orbifold_n", opt(r.orbifold_n)},
          {"label", opt(r.label)},
          {"notes", r.notes},
          {"endpoints", to_json(r.endpoints)}};
}

json to_json(const std::vector<ClassificationRecord>& recs) {
  json out = json::array();
  for (const auto& r : recs) out.push_back(to_json(r));
  return out;
}

std::string document(const std::string& command, json payload) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// Targets: a named solution or a numeric triple
// ---------------------------------------------------------------------------

struct TargetOptions {
  std::string name;
  int a = 0;
  double C = 0.0;
  double lambda = 0.0;
  double D = 1.0;
  int n = 3;
  double z = 0.5;
  CLI::Option* a_opt = nullptr;
  CLI::Option* C_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* name_opt = nullptr;
};

void add_target(CLI::App* app, TargetOptions& t) {
  t.name_opt = app->add_option("--name", t.name, "Named solution");
  t.a_opt = app->add_option("--a", t.a, "Branch constant a")->check(CLI::IsMember({-1, 0, 1}));
  t.C_opt = app->add_option("--C", t.C, "Integration constant C");
  t.lambda_opt = app->add_option("--lambda", t.lambda, "Einstein constant (family_c24: family parameter)");
  app->add_option("--D", t.D, "Eguchi-Hanson scale D");
  app->add_option("--n", t.n, "Collapse order for orbifold and root families");
  app->add_option("--z", t.z, "Prescribed root for root families");
  t.name_opt->excludes(t.a_opt)->excludes(t.C_opt);
}

struct Target {
  std::optional<std::string> name;
  ModelParams params;
  std::optional<SInterval> interval;  // fixed by a named solution
};

Target resolve(const TargetOptions& t) {
  Target out;
  if (t.name_opt->count() > 0) {
    const auto name = parse_solution_name(t.name);
    if (!name) throw UsageError("unknown solution name '" + t.name + "'");
    SolutionRequest req{*name};
    req.D = t.D;
    req.n = t.n;
    req.z = t.z;
    req.lambda = t.lambda;
    const auto fam = named_solution(req);
    out.name = t.name;
    out.params = fam.params;
    out.interval = fam.s_interval;
    return out;
  }
  if (t.a_opt->count() == 0 || t.C_opt->count() == 0 || t.lambda_opt->count() == 0) {
    throw UsageError("give --name or all of --a, --C, --lambda");
  }
  out.params = {branch_from_int(t.a), t.C, t.lambda};
  return out;
}

json to_json(const Target& t) {
  json out;
  out["name"] = t.name ? json(*t.name) : json(nullptr);
  out["params"] = to_json(t.params);
  return out;
}

std::vector<SInterval> intervals_of(const Target& t) {
  if (t.interval) return {*t.interval};
  std::vector<SInterval> out;
  for (const auto& iv : positivity_intervals(t.params)) out.push_back(iv.s);
  if (out.empty()) throw Error(ErrorKind::Domain, "f^2 <= 0 for every s > 0");
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

// count nodes spaced L / (count + 1) apart, L the t-length (infinite_span
// toward an infinite end), so the ends themselves are never sampled.
ProfileGrid interior_grid(const ModelParams& params, const SInterval& s, int count) {
  const auto iv = match_interval(params, s);
  if (!iv) throw Error(ErrorKind::InvalidInterval, "not a maximal positivity interval");
  const ArcLength arc(params, *iv);
  SampleOptions so;
  const double length = arc.t_hi() - arc.t_lo();
  so.margin = (std::isfinite(length) ? length : so.infinite_span) / (count + 1);
  return sample_profile(params, s, count, so);
}

struct Common {
  int grid = 200;
  double tol = 1e-8;
  std::string format;
  std::string out_path;
  int interval = 0;
};

int cmd_verify(const Target& target, const Common& c, std::ostream& out) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  static constexpr const char* kComponents[] = {"ric00", "ric11", "ric22"};
  double max_res = 0.0;
  json intervals = json::array();
  for (const auto& s : intervals_of(target)) {
    const auto grid = interior_grid(target.params, s, c.grid);
    double worst_res[3] = {0.0, 0.0, 0.0};
    const ProfileSample* worst_at[3] = {nullptr, nullptr, nullptr};
    for (const auto& x : grid.samples) {
      const auto r = ricci_diag(x);
      for (int i = 0; i < 3; ++i) {
        const double d = std::abs(r[i] - target.params.lambda);
        if (!(d <= worst_res[i]) || !worst_at[i]) {
          worst_res[i] = d;
          worst_at[i] = &x;
        }
      }
    }
    json worst = json::array();
    double iv_max = 0.0;
    for (int i = 0; i < 3; ++i) {
      iv_max = std::max(iv_max, worst_res[i]);
      worst.push_back({{"component", kComponents[i]},
                       {"residual", num(worst_res[i])},
                       {"t", num(worst_at[i]->t)},
                       {"s", num(worst_at[i]->s)}});
    }
    max_res = std::max(max_res, iv_max);
    intervals.push_back({{"s_interval", to_json(s)}, {"max_residual", num(iv_max)}, {"worst", worst}});
  }
  const bool pass = max_res <= c.tol;
  json payload;
  payload["target"] = to_json(target);
  payload["grid"] = c.grid;
  payload["tol"] = num(c.tol);
  payload["intervals"] = intervals;
  payload["max_residual"] = num(max_res);
  payload["pass"] = pass;
  emit(document("verify", payload), c.out_path, out);
  return pass ? kExitOk : kExitFailed;
}

int cmd_classify(const Target& target, const Common& c, std::ostream& out) {
  json payload;
  payload["target"] = to_json(target);
  payload["records"] = to_json(classify_case(target.params));
  emit(document("classify", payload), c.out_path, out);
  return kExitOk;
}

struct SweepOptions {
  std::vector<int> a;
  std::vector<double> C;
  std::vector<double> lambda;
  std::vector<double> C_range;
  std::vector<double> lambda_range;
  unsigned threads = 0;
};

std::vector<double> linspace(const std::vector<double>& r, const char* flag) {
  const double count = r.at(2);
  if (count < 1 || count != std::floor(count)) throw UsageError(std::string(flag) + " count must be a positive integer");
  const int k = static_cast<int>(count);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(k == 1 ? r[0] : r[0] + (r[1] - r[0]) * i / (k - 1));
  return out;
}

int cmd_sweep(SweepOptions s, const Common& c, std::ostream& out) {
  if (!s.C_range.empty()) {
    const auto v = linspace(s.C_range, "--C-range");
    s.C.insert(s.C.end(), v.begin(), v.end());
  }
  if (!s.lambda_range.empty()) {
    const auto v = linspace(s.lambda_range, "--lambda-range");
    s.lambda.insert(s.lambda.end(), v.begin(), v.end());
  }
  if (s.a.empty() || s.C.empty() || s.lambda.empty()) throw UsageError("sweep needs values for a, C and lambda");
  for (int a : s.a) {
    if (a < -1 || a > 1) throw UsageError("--a values must be -1, 0 or 1");
  }
  GridSpec grid;
  grid.a = s.a;
  grid.C = s.C;
  grid.lambda = s.lambda;
  const auto recs = sweep(grid, s.threads);
  json payload;
  payload["grid"] = {{"a", s.a}, {"C", json::array()}, {"lambda", json::array()}};
  for (double v : s.C) payload["grid"]["C"].push_back(num(v));
  for (double v : s.lambda) payload["grid"]["lambda"].push_back(num(v));
  payload["count"] = recs.size();
  payload["records"] = to_json(recs);
  emit(document("sweep", payload), c.out_path, out);
  return kExitOk;
}

int cmd_profile(const Target& target, const Common& c, std::ostream& out) {
  const auto intervals = intervals_of(target);
  if (c.interval < 0 || c.interval >= static_cast<int>(intervals.size())) {
    throw UsageError("--interval out of range (" + std::to_string(intervals.size()) + " intervals)");
  }
  const auto grid = interior_grid(target.params, intervals[static_cast<std::size_t>(c.interval)], c.grid);
  static const std::vector<std::string> kColumns = {"t",     "s",     "f",     "h",    "df_dt",
                                                    "dh_dt", "ric00", "ric11", "ric22"};
  std::vector<std::array<double, 9>> rows;
  for (const auto& x : grid.samples) {
    const auto r = ricci_diag(x);
    rows.push_back({x.t, x.s, x.f, x.h, x.df_dt, x.dh_dt, r.ric00, r.ric11, r.ric22});
  }
  std::string text;
  if (c.format == "json") {
    json payload;
    payload["target"] = to_json(target);
    payload["s_interval"] = to_json(grid.s_interval);
    payload["columns"] = kColumns;
    payload["rows"] = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (double v : row) r.push_back(num(v));
      payload["rows"].push_back(r);
    }
    payload["endpoints"] = to_json(grid.endpoints);
    text = document("profile", payload);
  } else {
    std::ostringstream csv;
    for (std::size_t i = 0; i < kColumns.size(); ++i) csv << (i ? "," : "") << kColumns[i];
    csv << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << num17(row[i]);
      csv << '\n';
    }
    text = csv.str();
  }
  emit(text, c.out_path, out);
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomogeneity-one Einstein metrics on I x S^3", "einstein-cyl"};
  app.require_subcommand(1);

  TargetOptions verify_target;
  TargetOptions classify_target;
  TargetOptions profile_target;
  Common common;
  SweepOptions sweep_opts;

  auto* verify = app.add_subcommand("verify", "Einstein residual of a named solution or parameter triple");
  add_target(verify, verify_target);
  verify->add_option("--grid", common.grid, "Samples per interval")->check(CLI::Range(3, 10000000));
  verify->add_option("--tol", common.tol, "Residual tolerance");
  verify->add_option("--out", common.out_path, "Output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "Completeness and smoothness verdicts");
  add_target(classify, classify_target);
  classify->add_option("--out", common.out_path, "Output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify a product grid of parameters");
  sweep_cmd->add_option("--a", sweep_opts.a, "Branch values")->delimiter(',');
  sweep_cmd->add_option("--C", sweep_opts.C, "C values")->delimiter(',');
  sweep_cmd->add_option("--lambda", sweep_opts.lambda, "lambda values")->delimiter(',');
  sweep_cmd->add_option("--C-range", sweep_opts.C_range, "lo hi count")->expected(3);
  sweep_cmd->add_option("--lambda-range", sweep_opts.lambda_range, "lo hi count")->expected(3);
  sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker cap (0: EINSTEIN_CYL_THREADS or hardware)");
  sweep_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  auto* profile = app.add_subcommand("profile", "Sampled profile with Ricci components");
  add_target(profile, profile_target);
  profile->add_option("--grid", common.grid, "Number of rows")->check(CLI::Range(3, 10000000));
  profile->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  profile->add_option("--interval", common.interval, "Index of the positivity interval");
  profile->add_option("--out", common.out_path, "Output path (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(resolve(verify_target), common, out);
    if (*classify) return cmd_classify(resolve(classify_target), common, out);
    if (*sweep_cmd) return cmd_sweep(sweep_opts, common, out);
    if (*profile) return cmd_profile(resolve(profile_target), common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Io ? kExitIo : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ecyl::cli
