#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "agpir/config.hpp"
#include "agpir/curve.hpp"
#include "agpir/lincode.hpp"
#include "agpir/lsss.hpp"
#include "agpir/pir.hpp"
#include "agpir/rng.hpp"
#include "manifest.hpp"

using namespace agpir;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct GlobalOpts {
  bool pretty = false;
  int threads = 1;
};

std::string render_poly(const Field& f, const Poly& p, bool pretty) {
  if (!pretty) return poly_to_string(p);
  std::ostringstream out;
  for (std::size_t i = 0; i < p.coef.size(); ++i) {
    if (i) out << ",";
    out << f.to_string(p.coef[i], true);
  }
  return out.str();
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error("cannot write '" + path + "'");
  return file;
}

PirScheme scheme_from_config(const SchemeConfig& sc) {
  const Field f = field_from_config(sc.field);
  if (sc.genus0) return plan_scheme_genus0(f, sc.X, sc.T, sc.L, sc.M);
  if (!sc.curve) throw Error("config: a curve block or genus0 = true is required");
  const HyperellipticCurve curve = curve_from_config(f, *sc.curve);
  return plan_scheme(curve, sc.X, sc.T, sc.L, sc.M);
}

void print_scheme_summary(const PirScheme& scheme) {
  const PirParams& p = scheme.params;
  if (p.curve) {
    std::cout << "construction = hyperelliptic, g = " << p.genus() << "\n";
  } else {
    std::cout << "construction = genus0\n";
  }
  std::cout << "q = " << p.field.q() << "\n";
  std::cout << "L = " << p.L << ", X = " << p.X << ", T = " << p.T << ", M = " << p.M << "\n";
  std::cout << "N = " << p.N << " servers, delta = " << p.delta << "\n";
  std::cout << "gammas = ";
  for (std::size_t i = 0; i < p.gammas.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << p.gammas[i];
  }
  std::cout << "\n";
  const Rational r = rate(p);
  std::cout << "rate = " << p.L << "/" << p.N << " ~ " << r.value() << " (lowest terms " << r.num
            << "/" << r.den << ")\n";
  for (const std::string& w : scheme.warnings) std::cout << "warning: " << w << "\n";
}

int cmd_curve_info(const std::string& config_path, const GlobalOpts& opts) {
  const SchemeConfig sc = load_scheme_config(config_path);
  if (!sc.curve) throw Error("config: curve info needs a curve block");
  const Field f = field_from_config(sc.field);
  const CurveConfig& cc = *sc.curve;
  auto to_poly = [&](const std::vector<std::int64_t>& v) {
    std::vector<FieldElem> c;
    for (const std::int64_t x : v) c.push_back(f.element(static_cast<std::uint64_t>(x)));
    return Poly{std::move(c)};
  };
  const CurveValidation v = HyperellipticCurve::validate(f, cc.genus, to_poly(cc.F), to_poly(cc.H));
  if (!v.valid) {
    std::cout << "valid = false\n";
    for (const std::string& e : v.errors) std::cout << "error: " << e << "\n";
    return kVerifyFailed;
  }
  const HyperellipticCurve curve = curve_from_config(f, cc);
  std::cout << "valid = true\n";
  std::cout << "q = " << f.q() << ", genus = " << curve.genus() << "\n";
  std::cout << "F = " << render_poly(f, curve.F(), opts.pretty) << "\n";
  std::cout << "H = " << render_poly(f, curve.H(), opts.pretty) << "\n";
  for (const std::string& w : curve.warnings()) std::cout << "warning: " << w << "\n";
  std::cout << "points = " << curve.count_points() << "\n";
  std::cout << "hasse_weil_bound = " << curve.hasse_weil_bound() << "\n";
  std::cout << "two_q_plus_one = " << 2 * f.q() + 1 << "\n";
  const auto z = curve.y_zeros();
  std::cout << "y_zeros_rational = " << z.rational.size() << " (deg (y)_0 = " << z.divisor_degree
            << ")\n";
  std::size_t free_x = 0;
  for (FieldElem x = 0; x < f.q(); ++x) {
    if (curve.fiber_ys(x).empty()) ++free_x;
  }
  std::cout << "free_x_coordinates = " << free_x << "\n";
  return kOk;
}

int cmd_curve_search(const std::string& config_path, int genus, std::size_t min_points,
                     std::uint64_t budget, const std::string& mode, std::uint64_t seed,
                     const std::string& out_path) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const Field f = field_from_config(sc.field);
  const SearchMode m = mode == "random" ? SearchMode::random : SearchMode::exhaustive;
  const auto curves = curve_search(f, genus, min_points, budget, m, seed);

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  for (const auto& c : curves) {
    out << poly_to_string(c.F()) << ";" << poly_to_string(c.H()) << ";" << c.count_points() << ";"
        << c.y_zeros().rational.size() << "\n";
  }
  if (!out_path.empty()) {
    cli::RunManifest manifest;
    manifest.command = "curve search";
    manifest.seed = seed;
    manifest.add("config", config_path);
    manifest.add("genus", static_cast<std::uint64_t>(genus));
    manifest.add("min_points", static_cast<std::uint64_t>(min_points));
    manifest.add("budget", budget);
    manifest.add("mode", mode);
    manifest.write_sidecar(out_path);
  }
  std::cerr << "found " << curves.size() << " curves\n";
  return kOk;
}

int cmd_scheme_plan(const std::string& config_path, const std::string& dump_basis) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const PirScheme scheme = scheme_from_config(sc);
  print_scheme_summary(scheme);
  if (!dump_basis.empty()) {
    std::ofstream out(dump_basis);
    if (!out) throw Error("cannot write '" + dump_basis + "'");
    auto dump = [&](const FuncElem& fn) {
      out << poly_to_string(fn.a) << ";" << poly_to_string(fn.b) << ";" << poly_to_string(fn.d)
          << ";" << fn.e << "\n";
    };
    for (const FuncElem& fn : scheme.csa.h_list) dump(fn);
    for (const FuncElem& fn : scheme.noise) dump(fn);
    for (const FuncElem& fn : scheme.completion) dump(fn);
    cli::RunManifest manifest;
    manifest.command = "scheme plan";
    manifest.seed = sc.seed;
    manifest.add("config", config_path);
    manifest.write_sidecar(dump_basis);
  }
  return kOk;
}

int cmd_scheme_verify(const std::string& config_path, bool exhaustive) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const PirScheme scheme = scheme_from_config(sc);
  const VerifyReport report = verify_scheme(scheme, exhaustive);
  for (const SchemeCheck& check : report.checks) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
  }
  std::cout << (report.pass ? "scheme verified" : "scheme verification FAILED") << "\n";
  return report.pass ? kOk : kVerifyFailed;
}

Lsss lsss_from_config(const SchemeConfig& sc, const Field& f) {
  const LsssConfig& lc = *sc.lsss;
  if (lc.kind == "shamir") {
    if (lc.n_parties == 0) throw Error("config: lsss.N is required for shamir");
    std::vector<FieldElem> alphas;
    for (std::size_t i = 1; i <= lc.n_parties; ++i) {
      alphas.push_back(f.element(i));
    }
    return lsss_shamir(f, lc.n_parties, lc.t, alphas);
  }
  if (lc.kind == "chen_cramer") {
    if (!sc.curve) throw Error("config: chen_cramer needs a curve block");
    const HyperellipticCurve curve = curve_from_config(f, *sc.curve);
    std::vector<CurvePoint> pts;
    for (const CurvePoint& p : curve.enumerate_points()) {
      if (!p.at_infinity && p.y != 0) pts.push_back(p);
    }
    return lsss_chen_cramer(curve, lc.t, FuncElem::y_func(), pts);
  }
  throw Error("config: unknown lsss kind '" + lc.kind + "'");
}

void print_sigma_rows(std::ostream& out, const Field& f, const LinearCode& code,
                      const std::string& label, std::size_t u_lo, std::size_t u_hi, int threads) {
  out << "# code = " << label << "\n";
  out << "U,insecure,total,sigma\n";
  for (std::size_t u = u_lo; u <= u_hi; ++u) {
    SigmaPoint sp;
    try {
      sp = sigma_profile(f, code, u, threads);
    } catch (const GuardError& e) {
      out << "# U = " << u << " exceeds the enumeration guard: " << e.what() << "\n";
      break;
    }
    out << sp.u << "," << sp.insecure << "," << sp.total << "," << sp.sigma() << "\n";
  }
}

int cmd_scheme_audit(const std::string& config_path, const std::string& out_path,
                     const GlobalOpts& opts) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const Field f = field_from_config(sc.field);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  bool pass = true;

  if (sc.lsss) {
    const Lsss scheme = lsss_from_config(sc, f);
    const int g = scheme.curve ? scheme.curve->genus() : 0;
    const SecurityReport sec =
        lsss_verify_security(scheme, sc.lsss->t, SecurityMode::dual_distance);
    pass = sec.pass;
    std::cout << (sec.pass ? "PASS" : "FAIL") << " lsss security: d_perp = " << sec.dual_dist
              << ", T claim = " << sc.lsss->t << "\n";
    const LinearCode noise = code_from_rows(f, scheme.noise_rows, scheme.points);
    print_sigma_rows(out, f, noise, "noise", sc.lsss->t,
                     sc.lsss->t + static_cast<std::size_t>(g), opts.threads);
  } else {
    const PirScheme scheme = scheme_from_config(sc);
    const VerifyReport report = verify_scheme(scheme);
    pass = report.pass;
    for (const SchemeCheck& check : report.checks) {
      std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
    }
    const std::size_t g = static_cast<std::size_t>(scheme.params.genus());
    if (scheme.params.T > 0) {
      const LinearCode query = code_from_rows(f, scheme.query_noise, scheme.points);
      print_sigma_rows(out, f, query, "query-noise", scheme.params.T, scheme.params.T + g,
                       opts.threads);
    }
    if (scheme.params.X > 0) {
      const LinearCode storage = code_from_rows(f, scheme.storage_noise[0], scheme.points);
      print_sigma_rows(out, f, storage, "storage-noise-l1", scheme.params.X, scheme.params.X + g,
                       opts.threads);
    }
  }

  if (!out_path.empty()) {
    cli::RunManifest manifest;
    manifest.command = "scheme audit";
    manifest.seed = sc.seed;
    manifest.add("config", config_path);
    manifest.write_sidecar(out_path);
  }
  return pass ? kOk : kVerifyFailed;
}

std::vector<std::vector<FieldElem>> load_files_csv(const std::string& path, const Field& f,
                                                   std::size_t m, std::size_t l) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read files from '" + path + "'");
  std::vector<std::vector<FieldElem>> files;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<FieldElem> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.push_back(f.element(std::stoull(cell)));
    }
    files.push_back(std::move(row));
  }
  if (files.size() != m) throw Error("files: expected M = " + std::to_string(m) + " rows");
  for (const auto& row : files) {
    if (row.size() != l) throw Error("files: expected L = " + std::to_string(l) + " fragments");
  }
  return files;
}

int cmd_pir_run(const std::string& config_path, std::size_t mu_1based,
                const std::string& files_path, const std::string& transcript_path,
                std::uint64_t seed_override, bool has_seed_override, const GlobalOpts& opts) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const std::uint64_t seed = has_seed_override ? seed_override : sc.seed;
  const PirScheme scheme = scheme_from_config(sc);
  print_scheme_summary(scheme);

  const Field& f = scheme.params.field;
  if (mu_1based < 1 || mu_1based > scheme.params.M) {
    throw Error("mu = " + std::to_string(mu_1based) + " is out of range 1.." +
                std::to_string(scheme.params.M));
  }
  const std::size_t mu = mu_1based - 1;

  std::vector<std::vector<FieldElem>> files;
  if (files_path.empty()) {
    Rng rng(seed ^ 0x66696c6573ull);  // independent stream for generated files
    files.assign(scheme.params.M, std::vector<FieldElem>(scheme.params.L));
    for (auto& file : files) {
      for (auto& v : file) v = rng.uniform(f);
    }
    std::cout << "files: generated " << scheme.params.M << " x " << scheme.params.L
              << " fragments from seed " << seed << "\n";
  } else {
    files = load_files_csv(files_path, f, scheme.params.M, scheme.params.L);
    std::cout << "files: loaded from " << files_path << "\n";
  }

  const StorageState storage = encode_storage(scheme, files, seed);
  const QuerySet queries = make_queries(scheme, mu, seed + 1);
  const ResponseVector responses = respond_all(scheme, storage, queries, opts.threads);
  const std::vector<FieldElem> decoded = decode(scheme, responses);

  if (!transcript_path.empty()) {
    std::ofstream out(transcript_path);
    if (!out) throw Error("cannot write '" + transcript_path + "'");
    out << "record,m,l,server,value\n";
    for (std::size_t m = 0; m < scheme.params.M; ++m) {
      for (std::size_t l = 0; l < scheme.params.L; ++l) {
        for (std::size_t n = 0; n < scheme.params.N; ++n) {
          out << "storage," << m + 1 << "," << l + 1 << "," << n + 1 << ","
              << storage.at(m, l, n) << "\n";
        }
      }
    }
    for (std::size_t m = 0; m < scheme.params.M; ++m) {
      for (std::size_t l = 0; l < scheme.params.L; ++l) {
        for (std::size_t n = 0; n < scheme.params.N; ++n) {
          out << "query," << m + 1 << "," << l + 1 << "," << n + 1 << "," << queries.at(m, l, n)
              << "\n";
        }
      }
    }
    for (std::size_t n = 0; n < scheme.params.N; ++n) {
      out << "response,,," << n + 1 << "," << responses[n] << "\n";
    }
    for (std::size_t l = 0; l < scheme.params.L; ++l) {
      out << "decoded,," << l + 1 << ",," << decoded[l] << "\n";
    }
    cli::RunManifest manifest;
    manifest.command = "pir run";
    manifest.seed = seed;
    manifest.add("config", config_path);
    manifest.add("mu", static_cast<std::uint64_t>(mu_1based));
    if (!files_path.empty()) manifest.add("files", files_path);
    manifest.write_sidecar(transcript_path);
  }

  if (decoded == files[mu]) {
    std::cout << "decode: retrieved file " << mu_1based << " correctly ("
              << scheme.params.L << " fragments from " << scheme.params.N << " responses)\n";
    return kOk;
  }
  std::cout << "decode: MISMATCH against the stored file\n";
  return kVerifyFailed;
}

int cmd_rate_sweep(const std::string& config_path, std::size_t xt_min, std::size_t xt_max,
                   const std::string& out_path) {
  const SchemeConfig sc = load_scheme_config(config_path);
  const Field f = field_from_config(sc.field);
  std::vector<std::pair<std::string, HyperellipticCurve>> curves;
  std::size_t index = 1;
  auto add_curve = [&](const CurveConfig& cc) {
    const std::string label =
        cc.label.empty() ? "curve" + std::to_string(index) : cc.label;
    curves.emplace_back(label, curve_from_config(f, cc));
    ++index;
  };
  if (sc.curve) add_curve(*sc.curve);
  for (const CurveConfig& cc : sc.curves) add_curve(cc);

  const auto rows = rate_sweep(f, curves, xt_min, xt_max);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "xt,construction,genus,L,N,rate_num,rate_den,rate\n";
  char buffer[32];
  for (const RateSweepRow& row : rows) {
    std::snprintf(buffer, sizeof buffer, "%.6f",
                  row.feasible ? static_cast<double>(row.L) / static_cast<double>(row.N) : 0.0);
    if (row.feasible) {
      out << row.xt << "," << row.construction << "," << row.genus << "," << row.L << ","
          << row.N << "," << row.r.num << "," << row.r.den << "," << buffer << "\n";
    } else {
      out << row.xt << "," << row.construction << "," << row.genus << ",0,0,0,1," << buffer
          << "\n";
    }
  }
  if (!out_path.empty()) {
    cli::RunManifest manifest;
    manifest.command = "rate sweep";
    manifest.seed = sc.seed;
    manifest.add("config", config_path);
    manifest.add("xt_min", static_cast<std::uint64_t>(xt_min));
    manifest.add("xt_max", static_cast<std::uint64_t>(xt_max));
    manifest.write_sidecar(out_path);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"X-secure T-private information retrieval from evaluation codes"};
  app.require_subcommand(1);
  GlobalOpts opts;
  app.add_flag("--pretty", opts.pretty, "render binary-field elements as polynomials");
  app.add_option("--threads", opts.threads, "worker threads for enumeration and responses")
      ->default_val(1);

  // curve search | info
  auto* curve_cmd = app.add_subcommand("curve", "curve validation, enumeration and search");
  curve_cmd->require_subcommand(1);
  auto* search = curve_cmd->add_subcommand("search", "search for curves with many points");
  std::string search_config, search_mode = "exhaustive", search_out;
  int search_genus = 1;
  std::size_t search_min_points = 0;
  std::uint64_t search_budget = 1 << 20, search_seed = 0;
  search->add_option("--config", search_config, "field config file")->required();
  search->add_option("--genus", search_genus)->required();
  search->add_option("--min-points", search_min_points)->required();
  search->add_option("--budget", search_budget);
  search->add_option("--mode", search_mode)->check(CLI::IsMember({"exhaustive", "random"}));
  search->add_option("--seed", search_seed);
  search->add_option("--out", search_out, "write results (plus manifest) to this file");

  auto* info = curve_cmd->add_subcommand("info", "validate and describe one curve");
  std::string info_config;
  info->add_option("--config", info_config)->required();

  // scheme plan | verify | audit
  auto* scheme_cmd = app.add_subcommand("scheme", "plan and check scheme instances");
  scheme_cmd->require_subcommand(1);
  auto* plan = scheme_cmd->add_subcommand("plan", "derive all scheme parameters");
  std::string plan_config, plan_dump;
  plan->add_option("--config", plan_config)->required();
  plan->add_option("--dump-basis", plan_dump, "write basis functions as a;b;d;e CSV rows");

  auto* verify = scheme_cmd->add_subcommand("verify", "check decoder rank and dual distances");
  std::string verify_config;
  bool verify_exhaustive = false;
  verify->add_option("--config", verify_config)->required();
  verify->add_flag("--exhaustive", verify_exhaustive, "also check all X/T subsets by rank");

  auto* audit = scheme_cmd->add_subcommand("audit", "security beyond the design threshold");
  std::string audit_config, audit_out;
  audit->add_option("--config", audit_config)->required();
  audit->add_option("--out", audit_out, "write the sigma table (plus manifest) to this file");

  // pir run
  auto* pir_cmd = app.add_subcommand("pir", "run the retrieval protocol");
  pir_cmd->require_subcommand(1);
  auto* run = pir_cmd->add_subcommand("run", "plan, encode, query, respond, decode");
  std::string run_config, run_files, run_transcript;
  std::size_t run_mu = 1;
  std::uint64_t run_seed = 0;
  run->add_option("--config", run_config)->required();
  run->add_option("--mu", run_mu, "1-based index of the file to retrieve");
  run->add_option("--files", run_files, "CSV of M rows with L fragments each");
  run->add_option("--transcript", run_transcript, "write the full transcript CSV");
  run->add_option("--seed", run_seed, "overrides the seed from the config");

  // rate sweep
  auto* rate_cmd = app.add_subcommand("rate", "rate analyses");
  rate_cmd->require_subcommand(1);
  auto* sweep = rate_cmd->add_subcommand("sweep", "max rate per X = T for each construction");
  std::string sweep_config, sweep_out;
  std::size_t xt_min = 1, xt_max = 1;
  sweep->add_option("--config", sweep_config)->required();
  sweep->add_option("--xt-min", xt_min)->required();
  sweep->add_option("--xt-max", xt_max)->required();
  sweep->add_option("--out", sweep_out, "write the CSV (plus manifest) to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;  // fold CLI11's parse-error codes into 2
  }

  try {
    if (search->parsed()) {
      return cmd_curve_search(search_config, search_genus, search_min_points, search_budget,
                              search_mode, search_seed, search_out);
    }
    if (info->parsed()) return cmd_curve_info(info_config, opts);
    if (plan->parsed()) return cmd_scheme_plan(plan_config, plan_dump);
    if (verify->parsed()) return cmd_scheme_verify(verify_config, verify_exhaustive);
    if (audit->parsed()) return cmd_scheme_audit(audit_config, audit_out, opts);
    if (run->parsed()) {
      return cmd_pir_run(run_config, run_mu, run_files, run_transcript, run_seed,
                         run->count("--seed") > 0, opts);
    }
    if (sweep->parsed()) return cmd_rate_sweep(sweep_config, xt_min, xt_max, sweep_out);
  } catch (const GuardError& e) {
    std::cerr << "guard error: " << e.what() << "\n";
    return kGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
