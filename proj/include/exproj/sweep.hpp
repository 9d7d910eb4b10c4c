#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "exproj/bounds.hpp"
#include "exproj/lower_bounds.hpp"

namespace exproj {

inline int sweep_thread_count(int jobs) {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("EXPROJ_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return std::min(threads, std::max(1, jobs));
}

// Order-independent parallel map: worker i writes only slot i results.
template <typename Fn>
inline void parallel_for(int jobs, Fn&& fn) {
  const int threads = sweep_thread_count(jobs);
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct RegionRow {
  Rational a;
  Rational s;
  BoundValue upper;
  BoundValue lower;
  Rational gap;
};

// Bounds over the rational grid a = i/grid, s = j/grid inside the valid
// rectangle 0 < s < min{k, a}, 0 < a < n.
inline std::vector<RegionRow> region_sweep(const Problem& prob, int grid) {
  if (grid < 1 || grid > 400) throw std::domain_error("region sweep: need 1 <= grid <= 400");
  struct Job {
    Rational a;
    Rational s;
  };
  std::vector<Job> jobs;
  for (long long i = 1; i < static_cast<long long>(prob.n) * grid; ++i) {
    const Rational a(i, grid);
    for (long long j = 1; j < static_cast<long long>(prob.k) * grid; ++j) {
      const Rational s(j, grid);
      if (s < std::min(Rational(prob.k), a)) jobs.push_back({a, s});
    }
  }
  std::vector<RegionRow> rows(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    const auto& job = jobs[i];
    RegionRow row;
    row.a = job.a;
    row.s = job.s;
    row.upper = best_upper(prob, job.a, job.s);
    row.lower = best_lower(prob, job.a, job.s);
    row.gap = row.upper.value - row.lower.value;
    rows[i] = std::move(row);
  });
  return rows;
}

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

inline void write_region_csv(std::ostream& os, const Problem& prob,
                             const std::vector<RegionRow>& rows) {
  os << "n,k,a,s,upper,upper_source,lower,lower_source,gap,"
        "a_float,s_float,upper_float,lower_float,gap_float,is_exact\n";
  for (const RegionRow& r : rows) {
    os << prob.n << ',' << prob.k << ',' << format_rational(r.a) << ',' << format_rational(r.s)
       << ',' << format_rational(r.upper.value) << ',' << r.upper.source_label() << ','
       << format_rational(r.lower.value) << ',' << r.lower.source_label() << ','
       << format_rational(r.gap) << ',' << format_double(to_double(r.a)) << ','
       << format_double(to_double(r.s)) << ',' << format_double(to_double(r.upper.value)) << ','
       << format_double(to_double(r.lower.value)) << ',' << format_double(to_double(r.gap)) << ','
       << (r.gap == 0 ? 1 : 0) << '\n';
  }
}

// Flat heatmap of the upper−lower gap.  Twelve fixed fill colors from
// light to dark; cells with zero gap get the highlight color instead.
inline void write_region_svg(std::ostream& os, const Problem& prob, int grid,
                             const std::vector<RegionRow>& rows) {
  static const char* kPalette[12] = {"#f7fbff", "#e3eef9", "#d0e1f2", "#b7d4ea", "#94c4df",
                                     "#6daed5", "#4a97c9", "#2f7ebc", "#1864aa", "#0a4a90",
                                     "#083370", "#041f4a"};
  static const char* kExactColor = "#2ca02c";
  const int cell = std::max(2, 720 / std::max(prob.n * grid, prob.k * grid));
  const int width = prob.n * grid * cell;
  const int height = prob.k * grid * cell;
  double max_gap = 0.0;
  for (const RegionRow& r : rows) max_gap = std::max(max_gap, to_double(r.gap));
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  for (const RegionRow& r : rows) {
    const double a = to_double(r.a), s = to_double(r.s);
    const int x = static_cast<int>(a * grid - 1) * cell;
    const int y = height - static_cast<int>(s * grid) * cell;
    const char* color = kExactColor;
    if (r.gap != 0) {
      const double g = to_double(r.gap);
      int bucket = max_gap > 0 ? static_cast<int>(11.0 * g / max_gap) : 0;
      bucket = std::min(std::max(bucket, 0), 11);
      color = kPalette[bucket];
    }
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
       << "\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace exproj
