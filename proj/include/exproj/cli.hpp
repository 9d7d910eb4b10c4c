#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exproj/brascamp_lieb.hpp"
#include "exproj/cell_tree.hpp"
#include "exproj/grid_example.hpp"
#include "exproj/lower_bounds.hpp"
#include "exproj/sweep.hpp"
#include "exproj/synthetic.hpp"

namespace exproj::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (!token.empty()) parts.push_back(token);
  }
  return parts;
}

// Routes command output to --out when given, else to the session stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

}  // namespace detail

struct CommonFlags {
  std::string out;
  std::string format = "text";
  unsigned long long seed = 1;
};

inline int cmd_bounds(int n, int k, const std::string& a_text, const std::string& s_text,
                      const CommonFlags& flags, std::ostream& out) {
  const Problem prob(n, k);
  const Rational a = parse_rational(a_text);
  const Rational s = parse_rational(s_text);
  const BoundValue upper = best_upper(prob, a, s);
  const BoundValue lower = best_lower(prob, a, s);
  const Rational gap = upper.value - lower.value;
  detail::OutputTarget target(flags.out, out);
  std::ostream& os = target.stream();
  if (flags.format == "csv") {
    os << "n,k,a,s,upper,upper_source,lower,lower_source,gap\n";
    os << n << ',' << k << ',' << format_rational(a) << ',' << format_rational(s) << ','
       << format_rational(upper.value) << ',' << upper.source_label() << ','
       << format_rational(lower.value) << ',' << lower.source_label() << ','
       << format_rational(gap) << '\n';
  } else {
    os << "n=" << n << " k=" << k << " a=" << format_rational(a) << " s=" << format_rational(s)
       << '\n';
    os << "upper " << format_rational(upper.value) << " (" << upper.source_label() << ")\n";
    os << "lower " << format_rational(lower.value) << " (" << lower.source_label() << ")\n";
    os << "gap " << format_rational(gap) << '\n';
  }
  return kOk;
}

inline int cmd_region(int n, int k, int grid, const CommonFlags& flags, std::ostream& out) {
  const Problem prob(n, k);
  const std::vector<RegionRow> rows = region_sweep(prob, grid);
  detail::OutputTarget target(flags.out, out);
  std::ostream& os = target.stream();
  if (flags.format == "svg") {
    write_region_svg(os, prob, grid, rows);
  } else if (flags.format == "text") {
    Rational max_gap(0);
    long long exact = 0;
    for (const RegionRow& r : rows) {
      max_gap = std::max(max_gap, r.gap);
      if (r.gap == 0) ++exact;
    }
    os << "points " << rows.size() << '\n';
    os << "max_gap " << format_rational(max_gap) << '\n';
    os << "exact_cells " << exact << '\n';
  } else {
    write_region_csv(os, prob, rows);
  }
  return kOk;
}

inline int cmd_verify(int nmax, std::ostream& out) {
  if (nmax < 2 || nmax > 16) throw std::domain_error("verify: need 2 <= nmax <= 16");
  bool all_pass = true;
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 1; k < n; ++k) {
      const Problem prob(n, k);
      const Theorem1Report report = verify_theorem1(prob);
      bool closed_form_ok = true;
      for (int u = 1; u <= prob.grass_dim() && closed_form_ok; ++u) {
        const int t = static_cast<int>(prob.grass_dim()) - u;
        for (int l = 0; l <= n; ++l) {
          if (m_closed_form(prob, u, l) != m_of(prob, t, l)) {
            closed_form_ok = false;
            break;
          }
        }
      }
      const bool pass = report.all_pass && closed_form_ok;
      all_pass = all_pass && pass;
      out << "n=" << n << " k=" << k << (pass ? " PASS" : " FAIL");
      if (!report.all_pass) out << " (case inequality)";
      if (!closed_form_ok) out << " (closed form vs scan)";
      out << '\n';
    }
  }
  return all_pass ? kOk : kVerifyFailed;
}

inline int cmd_bl(const std::string& config_path, std::ostream& out) {
  std::ifstream is(config_path);
  if (!is) throw std::invalid_argument("cannot open config: " + config_path);
  const BLConfig config = read_bl_config(is);
  const CandidateFamily family = lattice_closure(config.n, config.subspaces);
  const BLResult result = bl_constant(config, family);
  out << "BL = " << format_rational(result.value) << '\n';
  out << "flag: certified lower bound over " << family.subspaces.size() << " candidates"
      << (result.truncated ? " (truncated)" : "") << '\n';
  out << "critical L:\n";
  write_subspace(out, result.critical);
  return kOk;
}

inline int cmd_simulate(const std::string& n_list, const std::string& a_text,
                        const std::string& s_text, double threshold, const CommonFlags& flags,
                        std::ostream& out) {
  const Rational a = parse_rational(a_text);
  const Rational s = parse_rational(s_text);
  std::vector<long long> sizes;
  for (const std::string& tok : detail::split_commas(n_list)) sizes.push_back(std::stoll(tok));
  if (sizes.empty()) throw std::domain_error("simulate: need at least one N");

  detail::OutputTarget target(flags.out, out);
  std::ostream& os = target.stream();
  // Single-N runs use the plain per-slope columns; sweeps prefix the N key.
  const bool multi = sizes.size() > 1;
  os << (multi ? "N,slope,count,threshold,is_exceptional\n"
               : "slope,count,threshold,is_exceptional\n");
  std::vector<std::pair<long long, long long>> exceptional_counts;
  std::vector<std::string> summaries;
  for (long long N : sizes) {
    const GridExample g = st_grid_example(N, a, s);
    const ExceptionalScan scan = exceptional_scan(g, threshold);
    size_t next_exceptional = 0;
    long long max_on_slopes = 0;
    for (long long slope = -g.N; slope <= g.N; ++slope) {
      const long long count = slope_projection_count(g, slope);
      bool exceptional = false;
      if (next_exceptional < scan.slopes.size() && scan.slopes[next_exceptional] == slope) {
        exceptional = true;
        ++next_exceptional;
      }
      if (slope >= -g.slope_bound && slope <= g.slope_bound)
        max_on_slopes = std::max(max_on_slopes, count);
      if (multi) os << N << ',';
      os << slope << ',' << count << ',' << format_double(scan.threshold) << ','
         << (exceptional ? 1 : 0) << '\n';
    }
    exceptional_counts.emplace_back(N, static_cast<long long>(scan.slopes.size()));
    std::ostringstream summary;
    summary << "# N=" << N << " points=" << g.point_count() << " slopes_in_E=" << g.slope_count()
            << " max_count_on_E=" << max_on_slopes << " exceptional=" << scan.slopes.size();
    summaries.push_back(summary.str());
  }
  for (const std::string& line : summaries) os << line << '\n';
  if (exceptional_counts.size() >= 2)
    os << "# fitted_exponent=" << format_double(loglog_regression_slope(exceptional_counts)) << '\n';
  return kOk;
}

inline int cmd_broadnarrow(const std::string& input, const std::string& synthetic, double delta,
                           const std::string& tau_text, const std::string& eps_text, int K,
                           int max_level, double threshold_constant, const CommonFlags& flags,
                           std::ostream& out) {
  PointSet points;
  if (!input.empty()) {
    std::ifstream is(input);
    if (!is) throw std::invalid_argument("cannot open point set: " + input);
    points = read_point_set(is);
  } else if (synthetic == "net") {
    points = synthetic_net(delta);
  } else if (synthetic == "clusters") {
    points = synthetic_two_clusters(delta);
  } else if (synthetic == "cantor") {
    const int levels = std::max(1, static_cast<int>(std::llround(std::log(1.0 / delta) / std::log(4.0))));
    points = synthetic_cantor(4, 2, levels, flags.seed);
  } else {
    throw std::domain_error("broadnarrow: unknown synthetic kind '" + synthetic + "'");
  }
  const Rational tau = parse_rational(tau_text);
  const Rational eps = parse_rational(eps_text);
  BroadNarrowOptions options;
  options.max_level = max_level;
  options.threshold_constant = threshold_constant;
  const BroadNarrowResult result = broad_narrow(points, tau, eps, K, options);

  detail::OutputTarget target(flags.out, out);
  std::ostream& os = target.stream();
  os << "broad-narrow: " << points.size() << " points, delta=" << points.delta << ", K=" << K
     << ", required=" << result.required << '\n';
  if (!result.input_mass_ok) {
    os << "  input rejected: " << result.note << '\n';
    return kVerifyFailed;
  }
  for (size_t r = 0; r < result.level_max_counts.size(); ++r) {
    os << "  level " << (r + 1) << ": max_child=" << result.level_max_counts[r]
       << " threshold=" << format_double(result.level_thresholds[r]) << '\n';
  }
  if (!result.success) {
    os << "  no broad level found: " << result.note << '\n';
    return kVerifyFailed;
  }
  os << "  split at level " << result.level << " with " << result.cells.size()
     << " significant cells (threshold " << format_double(result.threshold) << ")\n";
  for (size_t i = 0; i < result.cells.size(); ++i) {
    os << "    cell";
    for (long long c : result.cells[i]) os << ' ' << c;
    os << ": " << result.cell_counts[i] << " points\n";
  }
  return kOk;
}

// Parses argv-style arguments (program name excluded) and dispatches.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exceptional projection bound calculator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CommonFlags flags;
  app.add_option("--out", flags.out, "write output to this file");
  app.add_option("--format", flags.format, "output format: text, csv, or svg");
  app.add_option("--seed", flags.seed, "seed for randomized inputs");

  int n = 0, k = 0, grid = 0, nmax = 8;
  std::string a_text, s_text, n_list, config_path;
  double threshold = 5.0;

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "upper and lower bounds at one (a, s)");
  bounds_cmd->add_option("--n", n)->required();
  bounds_cmd->add_option("--k", k)->required();
  bounds_cmd->add_option("--a", a_text)->required();
  bounds_cmd->add_option("--s", s_text)->required();

  CLI::App* region_cmd = app.add_subcommand("region", "sweep the (a, s) rectangle on a rational grid");
  region_cmd->add_option("--n", n)->required();
  region_cmd->add_option("--k", k)->required();
  region_cmd->add_option("--grid", grid)->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive case verification up to nmax");
  verify_cmd->add_option("--nmax", nmax);

  CLI::App* bl_cmd = app.add_subcommand("bl", "Brascamp-Lieb constant from a config file");
  bl_cmd->add_option("config", config_path, "config file path")->required();

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "projection counts of the grid example");
  simulate_cmd->add_option("--N", n_list)->required();
  simulate_cmd->add_option("--a", a_text)->required();
  simulate_cmd->add_option("--s", s_text)->required();
  simulate_cmd->add_option("--threshold", threshold);

  std::string bn_input, bn_synthetic = "net", bn_tau = "1", bn_eps = "1/10";
  double bn_delta = 1.0 / 4096.0, bn_constant = 0.0;
  int bn_K = 4, bn_max_level = 0;
  CLI::App* bn_cmd = app.add_subcommand("broadnarrow", "multi-scale broad-narrow decomposition");
  bn_cmd->add_option("--input", bn_input, "point set file");
  bn_cmd->add_option("--synthetic", bn_synthetic, "net, clusters, or cantor");
  bn_cmd->add_option("--delta", bn_delta);
  bn_cmd->add_option("--tau", bn_tau);
  bn_cmd->add_option("--eps", bn_eps);
  bn_cmd->add_option("--K", bn_K);
  bn_cmd->add_option("--max-level", bn_max_level);
  bn_cmd->add_option("--threshold-constant", bn_constant);

  std::vector<const char*> argv;
  argv.push_back("exproj");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(n, k, a_text, s_text, flags, out);
    if (region_cmd->parsed()) return cmd_region(n, k, grid, flags, out);
    if (verify_cmd->parsed()) return cmd_verify(nmax, out);
    if (bl_cmd->parsed()) return cmd_bl(config_path, out);
    if (simulate_cmd->parsed()) return cmd_simulate(n_list, a_text, s_text, threshold, flags, out);
    if (bn_cmd->parsed())
      return cmd_broadnarrow(bn_input, bn_synthetic, bn_delta, bn_tau, bn_eps, bn_K, bn_max_level,
                             bn_constant, flags, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace exproj::cli
