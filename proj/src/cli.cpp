#include "setramsey/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "setramsey/bounds.hpp"
#include "setramsey/certificate.hpp"
#include "setramsey/construction.hpp"
#include "setramsey/diagnostics.hpp"
#include "setramsey/oracle.hpp"
#include "setramsey/params.hpp"
#include "setramsey/resample.hpp"
#include "setramsey/verifier.hpp"

namespace setramsey::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t parse_u32(std::string_view text) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("not a non-negative integer: '" + std::string(text) + "'");
  return value;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

// Output sink: a file when a path is given, otherwise the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  bool is_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct ParamOptions {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  std::string delta = "1/32";
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> m;
  std::optional<std::string> p;

  void add_to(CLI::App& app, bool required = true) {
    auto* r_opt = app.add_option("--r", r, "number of colours");
    auto* s_opt = app.add_option("--s", s, "colours per edge");
    auto* k_opt = app.add_option("--k", k, "forbidden clique size");
    if (required) {
      r_opt->required();
      s_opt->required();
      k_opt->required();
    }
    app.add_option("--delta", delta, "construction constant (rational, default 1/32)");
    app.add_option("--n", n, "vertex count override");
    app.add_option("--m", m, "part count override (main construction)");
    app.add_option("--p", p, "seed-graph edge probability override, e.g. 7/10 or 0.7");
  }

  ConstructionParams derive() const {
    try {
      auto params = derive_params(r, s, k, parse_rational(delta));
      std::optional<Rational> p_value;
      if (p) p_value = parse_rational(*p);
      if (n || m || p_value) params = override_params(params, m, n, p_value);
      return params;
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

ConstructionKind parse_kind(const std::string& text) {
  if (text == "main") return ConstructionKind::main;
  if (text == "simple") return ConstructionKind::simple;
  throw UsageError("--construction must be main or simple");
}

std::string describe(const ConstructionParams& params, ConstructionKind kind) {
  std::ostringstream out;
  out << "--construction " << (kind == ConstructionKind::main ? "main" : "simple") << " --r " << params.r << " --s "
      << params.s << " --k " << params.k << " --delta " << format_rational(params.delta) << " --n " << params.n;
  if (kind == ConstructionKind::main) out << " --m " << params.m << " --p " << format_rational(params.p);
  return out.str();
}

void print_report(const VerificationReport& report, std::ostream& out) {
  if (report.valid()) {
    out << "status=valid\n";
  } else {
    std::string reason;
    if (!report.min_colour_ok) reason = "min_colours";
    if (!report.clique_free) reason += std::string(reason.empty() ? "" : ",") + "clique";
    out << "status=invalid reason=" << reason << "\n";
  }
  out << "min_colour_ok=" << (report.min_colour_ok ? "true" : "false")
      << " violating_edges=" << report.violating_edges.size() << "\n";
  for (std::size_t i = 0; i < report.violating_edges.size() && i < 20; ++i) {
    const auto& v = report.violating_edges[i];
    out << "violation u=" << v.u << " v=" << v.v << " colours=" << v.popcount << "\n";
  }
  out << "clique_free=" << (report.clique_free ? "true" : "false") << "\n";
  if (report.witness)
    out << "witness colour=" << report.witness->colour_index << " vertices=" << join(report.witness->vertices)
        << "\n";
  if (report.per_colour_clique_numbers) {
    out << "clique_numbers=";
    const auto& w = *report.per_colour_clique_numbers;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
    out << "\n";
  }
}

int cmd_construct(const ParamOptions& popts, const std::string& kind_text, std::uint64_t seed,
                  std::uint64_t attempts, unsigned threads, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const auto kind = parse_kind(kind_text);
  const auto params = popts.derive();
  err << "invocation: setramsey construct " << describe(params, kind) << " --seed " << seed << " --attempts "
      << attempts << "\n";
  const auto outcome = resample_until_valid(params, kind, attempts, seed, threads);
  if (!outcome.succeeded()) {
    out << "status=failed attempts=" << outcome.attempts << " min_colour_failures=" << outcome.min_colour_failures
        << " clique_failures=" << outcome.clique_failures << "\n";
    return exit_invalid;
  }
  Sink sink(out_path, out);
  write_certificate(*outcome.certificate, sink.get());
  if (sink.is_file())
    out << "status=valid seed=" << *outcome.success_seed << " attempts=" << outcome.attempts
        << " sha256=" << outcome.certificate->checksum() << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& path, std::optional<std::uint32_t> s, std::optional<std::uint32_t> k,
               unsigned threads, bool clique_numbers, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  Certificate cert;
  try {
    cert = read_certificate(in);
  } catch (const CertificateError& e) {
    out << "status=invalid reason=certificate error=\"" << e.what() << "\"\n";
    return exit_invalid;
  }
  const auto report =
      verify(cert.colouring, s.value_or(cert.s), k.value_or(cert.k), {.threads = threads, .clique_numbers = clique_numbers});
  out << "r=" << cert.r << " s=" << s.value_or(cert.s) << " k=" << k.value_or(cert.k) << " n=" << cert.n()
      << " sha256=" << cert.checksum() << "\n";
  print_report(report, out);
  return report.valid() ? exit_ok : exit_invalid;
}

int cmd_oracle(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t cap, const std::string& out_path,
               const std::string& log_path, std::ostream& out) {
  ExactResult result;
  try {
    result = exact_ramsey(r, s, k, cap);
  } catch (const CapExceeded& e) {
    out << "status=cap_exceeded cap=" << cap << " best_witness_n=" << e.best_witness().n() << "\n";
    return exit_invalid;
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  } catch (const GuardError& e) {
    throw UsageError(e.what());
  }
  out << "value=" << result.value << " exhaustive=" << (result.exhaustive_upper_proof ? "yes" : "no") << "\n";
  if (!out_path.empty()) {
    Certificate cert;
    cert.r = r;
    cert.s = s;
    cert.k = k;
    cert.construction = ConstructionTag::external;
    cert.colouring = result.witness_colouring;
    Sink sink(out_path, out);
    write_certificate(cert, sink.get());
    out << "witness n=" << cert.n() << " sha256=" << cert.checksum() << "\n";
  }
  if (!log_path.empty()) {
    Sink sink(log_path, out);
    sink.get() << result.proof_log();
  } else {
    out << result.proof_log();
  }
  return exit_ok;
}

int cmd_bounds(const std::string& r_text, const std::string& r_pow2, const std::string& s_rule_text,
               const std::string& k_text, BoundConstants constants, bool chernoff, const std::string& out_path,
               std::ostream& out) {
  std::vector<std::uint32_t> r_values;
  if (!r_pow2.empty()) {
    for (auto e : parse_int_list(r_pow2)) {
      if (e > 12) throw UsageError("--r-pow2 exponent exceeds 12");
      r_values.push_back(1u << e);
    }
  } else {
    r_values = parse_int_list(r_text);
  }
  const auto k_values = parse_int_list(k_text);
  SRule rule;
  if (s_rule_text == "log2") {
    rule = s_minus_log2;
  } else if (s_rule_text.rfind("gap=", 0) == 0) {
    const auto gap = parse_u32(s_rule_text.substr(4));
    rule = [gap](std::uint32_t r) { return r > gap ? r - gap : 0; };
  } else if (s_rule_text.rfind("half", 0) == 0) {
    rule = [](std::uint32_t r) { return r / 2; };
  } else {
    const auto fixed = parse_u32(s_rule_text);
    rule = [fixed](std::uint32_t) { return fixed; };
  }
  Sink sink(out_path, out);
  std::size_t rows = 0;
  try {
    if (!chernoff) {
      rows = emit_bounds_table(r_values, rule, k_values, constants, sink.get());
    } else {
      sink.get() << bounds_table_header << "\n";
      for (auto r : r_values) {
        const auto s = rule(r);
        if (s < 1 || s >= r) continue;
        for (auto k : k_values) {
          auto c = constants;
          c.c_delta = k >= 3 ? chernoff_c_delta(r, s, k) : 0.0;
          sink.get() << format_bound_row(evaluate_bounds(r, s, k, c)) << "\n";
          ++rows;
        }
      }
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (sink.is_file()) out << "rows=" << rows << "\n";
  return exit_ok;
}

int cmd_sweep(const std::string& kind_text, const std::string& r_text, const std::string& s_text,
              const std::string& k_text, const std::string& n_text, const std::string& m_text,
              const std::string& p_text, const std::string& delta_text, std::uint64_t attempts, std::uint64_t seed,
              unsigned threads, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto kind = parse_kind(kind_text);
  const auto rs = parse_int_list(r_text);
  const auto ss = parse_int_list(s_text);
  const auto ks = parse_int_list(k_text);
  const auto ns = parse_int_list(n_text);
  const auto ms = m_text.empty() ? std::vector<std::uint32_t>{0} : parse_int_list(m_text);
  const auto delta = parse_rational(delta_text);
  std::optional<Rational> p;
  if (!p_text.empty()) p = parse_rational(p_text);
  if (attempts < 1) throw UsageError("--attempts must be at least 1");

  err << "invocation: setramsey sweep --construction " << kind_text << " --r " << r_text << " --s " << s_text
      << " --k " << k_text << " --n " << n_text << (m_text.empty() ? "" : " --m " + m_text)
      << (p_text.empty() ? "" : " --p " + p_text) << " --delta " << delta_text << " --attempts " << attempts
      << " --seed " << seed << "\n";

  Sink sink(out_path, out);
  for (auto r : rs)
    for (auto s : ss)
      for (auto k : ks)
        for (auto n : ns)
          for (auto m : ms) {
            if (s < 1 || s >= r) continue;
            ConstructionParams params;
            try {
              params = derive_params(r, s, k, delta);
              params = override_params(params, m ? std::optional<std::uint64_t>(m) : std::nullopt,
                                       std::optional<std::uint64_t>(n), p);
            } catch (const std::domain_error& e) {
              throw UsageError(e.what());
            }
            std::uint64_t successes = 0;
            std::uint64_t min_fail = 0;
            std::uint64_t clique_fail = 0;
            std::optional<std::uint64_t> first;
            for (std::uint64_t a = 0; a < attempts; ++a) {
              const auto outcome = resample_until_valid(params, kind, 1, seed + a, threads);
              successes += outcome.succeeded();
              min_fail += outcome.min_colour_failures;
              clique_fail += outcome.clique_failures;
              if (outcome.succeeded() && !first) first = seed + a;
            }
            nlohmann::ordered_json row;
            row["construction"] = kind_text;
            row["r"] = r;
            row["s"] = s;
            row["k"] = k;
            row["n"] = n;
            if (kind == ConstructionKind::main) {
              row["m"] = params.m;
              row["p"] = format_rational(params.p);
            }
            row["delta"] = format_rational(delta);
            row["base_seed"] = seed;
            row["attempts"] = attempts;
            row["successes"] = successes;
            row["failures"] = {{"min_colour", min_fail}, {"clique", clique_fail}};
            row["first_success_seed"] = first ? nlohmann::ordered_json(*first) : nlohmann::ordered_json(nullptr);
            sink.get() << row.dump() << "\n";
          }
  return exit_ok;
}

int cmd_diagnose(ParamOptions popts, const std::string& cert_path, std::optional<std::uint64_t> seed,
                 std::uint64_t samples, std::uint64_t sample_seed, unsigned threads, std::ostream& out) {
  if (!cert_path.empty()) {
    std::ifstream in(cert_path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + cert_path + "'");
    Certificate cert;
    try {
      cert = read_certificate(in);
    } catch (const CertificateError& e) {
      out << "status=invalid reason=certificate error=\"" << e.what() << "\"\n";
      return exit_invalid;
    }
    if (cert.construction != ConstructionTag::main || !cert.seed || !cert.m || !cert.p)
      throw UsageError("diagnose needs a main-construction certificate with seed, m and p");
    popts.r = cert.r;
    popts.s = cert.s;
    popts.k = cert.k;
    popts.n = cert.n();
    popts.m = cert.m;
    popts.p = format_rational(*cert.p);
    seed = cert.seed;
  }
  if (!seed) throw UsageError("--seed is required");
  if (samples < 1) throw UsageError("--samples must be at least 1");
  const auto params = popts.derive();
  const auto artifacts = build_main_colouring(params, *seed, threads);
  if (params.k > artifacts.colouring.n()) throw UsageError("k exceeds n");
  if (params.t_int > pair_count(params.k)) throw UsageError("t exceeds C(k,2); F cannot exist");

  StreamRng rng(sample_seed, 1, StreamTag::sampling);
  const Rational x_threshold = params.eps * Rational(params.r) * Rational(static_cast<std::int64_t>(params.t_int)) / 2;
  std::uint64_t x_max = 0;
  long double x_sum = 0;
  std::uint64_t large_x = 0;
  std::uint64_t bottlenecks = 0;
  long double y_sum = 0;
  long double z_sum = 0;
  std::uint64_t contained_in_b = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto f = sample_subgraph(rng, artifacts.colouring.n(), params.k, params.t_int);
    const auto diag = compute_cluster_diagnostics(f, artifacts.partitions, params.delta, params.eps);
    const auto bad = compute_bad_pair_stats(f, artifacts);
    x_max = std::max(x_max, diag.x_f);
    x_sum += diag.x_f;
    if (Rational(static_cast<std::int64_t>(diag.x_f)) >= x_threshold) ++large_x;
    bottlenecks += diag.bottleneck_ell.has_value();
    y_sum += bad.y_size;
    z_sum += bad.z_value;
    bool inside = true;
    for (const auto& e : f.edges()) inside = inside && artifacts.bad_edges.contains(e.u, e.v);
    contained_in_b += inside;
  }
  const auto max_bad = max_bad_edges_over_sampled_cliques(artifacts, params.k, samples, sample_seed);

  nlohmann::ordered_json report;
  report["r"] = params.r;
  report["s"] = params.s;
  report["k"] = params.k;
  report["n"] = params.n;
  report["m"] = params.m;
  report["p"] = format_rational(params.p);
  report["delta"] = format_rational(params.delta);
  report["seed"] = *seed;
  report["sample_seed"] = sample_seed;
  report["samples"] = samples;
  report["t"] = params.t_real();
  report["t_int"] = params.t_int;
  report["bad_edges"] = artifacts.bad_edges.size();
  report["x_f_mean"] = static_cast<double>(x_sum / samples);
  report["x_f_max"] = x_max;
  report["x_f_threshold"] = to_double(x_threshold);
  report["x_f_at_least_threshold"] = large_x;
  report["bottleneck_present"] = bottlenecks;
  report["y_mean"] = static_cast<double>(y_sum / samples);
  report["z_mean"] = static_cast<double>(z_sum / samples);
  report["f_contained_in_bad_edges"] = contained_in_b;
  report["max_bad_edges_in_sampled_k_sets"] = max_bad;
  out << report.dump() << "\n";
  return exit_ok;
}

}  // namespace

std::vector<std::uint32_t> parse_int_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) throw UsageError("empty integer list");
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (true) {
      const auto end = text.find(':', pos);
      parts.push_back(parse_u32(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    if (parts.size() > 3) throw UsageError("range must be lo:hi or lo:hi:step");
    const std::uint32_t step = parts.size() == 3 ? parts[2] : 1;
    if (step == 0 || parts[0] > parts[1]) throw UsageError("empty or invalid range");
    for (std::uint64_t v = parts[0]; v <= parts[1]; v += step) out.push_back(static_cast<std::uint32_t>(v));
    return out;
  }
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(',', pos);
    out.push_back(parse_u32(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-colouring Ramsey lower-bound constructions: build, verify, search, evaluate"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads (results do not depend on this)")->check(CLI::Range(1u, 1024u));

  // construct
  auto* construct = app.add_subcommand("construct", "build a construction and emit a certificate");
  ParamOptions construct_params;
  construct_params.add_to(*construct);
  std::string construct_kind = "simple";
  std::uint64_t construct_seed = 0;
  std::uint64_t construct_attempts = 1;
  std::string construct_out;
  construct->add_option("--construction", construct_kind, "main or simple")->check(CLI::IsMember({"main", "simple"}));
  construct->add_option("--seed", construct_seed, "first RNG seed")->required();
  construct->add_option("--attempts", construct_attempts, "seeds to try (seed, seed+1, ...)");
  construct->add_option("--out", construct_out, "certificate path (default: stdout)");
  construct->add_option("--threads", threads, "worker threads");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  std::string verify_path;
  std::optional<std::uint32_t> verify_s;
  std::optional<std::uint32_t> verify_k;
  bool verify_clique_numbers = false;
  verify_cmd->add_option("certificate", verify_path, "certificate file")->required();
  verify_cmd->add_option("--s", verify_s, "minimum colours per edge (default: header)");
  verify_cmd->add_option("--k", verify_k, "forbidden clique size (default: header)");
  verify_cmd->add_flag("--clique-numbers", verify_clique_numbers, "report exact clique number per colour");
  verify_cmd->add_option("--threads", threads, "worker threads");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact R_{r,s}(k) by exhaustive search (tiny parameters)");
  std::uint32_t oracle_r = 0;
  std::uint32_t oracle_s = 0;
  std::uint32_t oracle_k = 0;
  std::uint32_t oracle_cap = 8;
  std::string oracle_out;
  std::string oracle_log;
  oracle->add_option("--r", oracle_r)->required();
  oracle->add_option("--s", oracle_s)->required();
  oracle->add_option("--k", oracle_k)->required();
  oracle->add_option("--cap", oracle_cap, "largest n to try");
  oracle->add_option("--out", oracle_out, "write the witness colouring as a certificate");
  oracle->add_option("--log", oracle_log, "write the per-level proof log here (default: stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "emit the bounds table as CSV");
  std::string bounds_r = "16";
  std::string bounds_r_pow2;
  std::string bounds_s_rule = "log2";
  std::string bounds_k = "100";
  BoundConstants constants;
  bool bounds_chernoff = false;
  std::string bounds_out;
  bounds->add_option("--r", bounds_r, "r values: list a,b,c or range lo:hi[:step]");
  bounds->add_option("--r-pow2", bounds_r_pow2, "r = 2^e for e in this list/range (overrides --r)");
  bounds->add_option("--s-rule", bounds_s_rule, "log2 (s = r - ceil(log2 r)), gap=<g>, half, or a fixed s");
  bounds->add_option("--k", bounds_k, "k values: list or range");
  bounds->add_option("--c", constants.c, "constant c of the upper bound (default 1, arbitrary)");
  bounds->add_option("--c-prime", constants.c_prime, "constant c' of the product-colouring bound (default 1)");
  bounds->add_option("--delta", constants.delta, "delta (default 1/32)");
  bounds->add_option("--c-delta", constants.c_delta, "c(delta) (default 1, arbitrary)");
  bounds->add_flag("--chernoff-c-delta", bounds_chernoff, "use the relative-entropy value of c(delta) per row");
  bounds->add_option("--out", bounds_out, "CSV path (default: stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid of construction attempts, JSON lines per cell");
  std::string sweep_kind = "simple";
  std::string sweep_r, sweep_s, sweep_k, sweep_n, sweep_m, sweep_p, sweep_delta = "1/32", sweep_out;
  std::uint64_t sweep_attempts = 10;
  std::uint64_t sweep_seed = 0;
  sweep->add_option("--construction", sweep_kind)->check(CLI::IsMember({"main", "simple"}));
  sweep->add_option("--r", sweep_r)->required();
  sweep->add_option("--s", sweep_s)->required();
  sweep->add_option("--k", sweep_k)->required();
  sweep->add_option("--n", sweep_n)->required();
  sweep->add_option("--m", sweep_m, "part counts (main)");
  sweep->add_option("--p", sweep_p, "edge probability override (main)");
  sweep->add_option("--delta", sweep_delta);
  sweep->add_option("--attempts", sweep_attempts, "seeds per cell");
  sweep->add_option("--seed", sweep_seed, "base seed")->required();
  sweep->add_option("--out", sweep_out, "JSON-lines path (default: stdout)");
  sweep->add_option("--threads", threads, "worker threads");

  // diagnose
  auto* diagnose = app.add_subcommand("diagnose", "clustering and bad-pair statistics on a main construction");
  ParamOptions diagnose_params;
  diagnose_params.add_to(*diagnose, false);
  std::string diagnose_cert;
  std::optional<std::uint64_t> diagnose_seed;
  std::uint64_t diagnose_samples = 1000;
  std::uint64_t diagnose_sample_seed = 0;
  diagnose->add_option("--cert", diagnose_cert, "main-construction certificate (supplies parameters and seed)");
  diagnose->add_option("--seed", diagnose_seed, "construction seed");
  diagnose->add_option("--samples", diagnose_samples, "sampled subgraphs F");
  diagnose->add_option("--sample-seed", diagnose_sample_seed, "seed for sampling F")->required();
  diagnose->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*construct)
      return cmd_construct(construct_params, construct_kind, construct_seed, construct_attempts, threads, construct_out,
                           out, err);
    if (*verify_cmd) return cmd_verify(verify_path, verify_s, verify_k, threads, verify_clique_numbers, out);
    if (*oracle) return cmd_oracle(oracle_r, oracle_s, oracle_k, oracle_cap, oracle_out, oracle_log, out);
    if (*bounds)
      return cmd_bounds(bounds_r, bounds_r_pow2, bounds_s_rule, bounds_k, constants, bounds_chernoff, bounds_out, out);
    if (*sweep)
      return cmd_sweep(sweep_kind, sweep_r, sweep_s, sweep_k, sweep_n, sweep_m, sweep_p, sweep_delta, sweep_attempts,
                       sweep_seed, threads, sweep_out, out, err);
    if (*diagnose)
      return cmd_diagnose(diagnose_params, diagnose_cert, diagnose_seed, diagnose_samples, diagnose_sample_seed,
                          threads, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace setramsey::cli
