#include "hexforge/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <stdexcept>
#include <thread>

#include "hexforge/crossing.hpp"
#include "hexforge/pipeline.hpp"
#include "hexforge/rng.hpp"

namespace hexforge {
namespace {

// Runs fn(trial) for trial in [0, trials); results land in a preallocated
// slot per trial so any thread count yields identical aggregates.
void parallel_trials(int trials, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || trials <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<int> next{0};
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        fn(t);
      }
    });
  for (auto& th : workers) th.join();
}

double mean_of(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / xs.size();
}

}  // namespace

void SweepConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("SweepConfig: trials >= 1");
  for (double p : ps)
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("SweepConfig: p in [0,1]");
  for (int L : Ls)
    if (L < 1) throw std::invalid_argument("SweepConfig: L >= 1");
}

std::uint64_t trial_seed(std::uint64_t master, int L, int p_index, int trial) {
  return rng::hash4(master, static_cast<std::uint64_t>(L),
                    static_cast<std::uint64_t>(p_index), static_cast<std::uint64_t>(trial));
}

bool has_h_crossing(const OccupancyGrid& grid) {
  const int L = grid.L;
  std::vector<std::uint8_t> seen(static_cast<size_t>(L) * L, 0);
  std::deque<VertexId> queue;
  for (int r = 0; r < L; ++r)
    if (grid.occupied(r, 0)) {
      seen[static_cast<size_t>(r) * L] = 1;
      queue.push_back({r, 0});
    }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    if (v.col == L - 1) return true;
    static constexpr int dr[4] = {0, 1, 0, -1};
    static constexpr int dc[4] = {1, 0, -1, 0};
    for (int d = 0; d < 4; ++d) {
      int r = v.row + dr[d], c = v.col + dc[d];
      if (r < 0 || r >= L || c < 0 || c >= L || !grid.occupied(r, c)) continue;
      size_t idx = static_cast<size_t>(r) * L + c;
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back({r, c});
      }
    }
  }
  return false;
}

CurvePoint crossing_probability(int L, double p, int trials, std::uint64_t seed,
                                int p_index, int jobs) {
  LatticeConfig probe{L, p, 0};
  probe.validate();
  std::vector<double> hits(trials, 0.0);
  parallel_trials(trials, jobs, [&](int t) {
    auto grid = sample_grid({L, p, trial_seed(seed, L, p_index, t)});
    hits[t] = has_h_crossing(grid) ? 1.0 : 0.0;
  });
  CurvePoint point;
  point.L = L;
  point.p = p;
  point.trials = trials;
  point.estimate = mean_of(hits);
  point.stderr_ = std::sqrt(point.estimate * (1 - point.estimate) / std::max(1, trials));
  return point;
}

std::vector<CurvePoint> overhead_curve(const SweepConfig& sweep) {
  sweep.validate();
  std::vector<CurvePoint> out;
  for (int L : sweep.Ls) {
    for (size_t pi = 0; pi < sweep.ps.size(); ++pi) {
      double p = sweep.ps[pi];
      std::vector<double> m(sweep.trials, 0.0), achieved(sweep.trials, 0.0);
      parallel_trials(sweep.trials, sweep.jobs, [&](int t) {
        // p_index 0 couples the samples across the whole p grid.
        auto grid = sample_grid({L, p, trial_seed(sweep.master_seed, L, 0, t)});
        auto graph = grid_to_graph(grid);
        m[t] = max_disjoint_crossings(graph, Orientation::H);
        achieved[t] = static_cast<double>(find_h_paths(graph).paths.size());
      });
      CurvePoint point;
      point.L = L;
      point.p = p;
      point.trials = sweep.trials;
      point.estimate = mean_of(m) / L;
      double var = 0;
      for (double v : m) var += (v / L - point.estimate) * (v / L - point.estimate);
      point.stderr_ = sweep.trials > 1 ? std::sqrt(var / (sweep.trials - 1.0) / sweep.trials) : 0.0;
      point.achieved_pipeline_count = mean_of(achieved);
      out.push_back(point);
    }
  }
  return out;
}

ThresholdEstimate estimate_threshold(const std::vector<int>& Ls, int trials,
                                     std::uint64_t seed, int jobs) {
  if (Ls.empty()) throw std::invalid_argument("estimate_threshold: need at least one size");
  ThresholdEstimate est;
  est.Ls = Ls;
  for (int L : Ls) {
    // The coupled empirical crossing curve is a monotone step function of p,
    // so plain bisection pins its 1/2 crossing.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 25; ++it) {
      double mid = 0.5 * (lo + hi);
      CurvePoint point = crossing_probability(L, mid, trials, seed, 0, jobs);
      if (point.estimate >= 0.5) hi = mid;
      else lo = mid;
    }
    est.per_size.push_back(0.5 * (lo + hi));
  }
  if (Ls.size() == 1) {
    est.estimate = est.per_size.front();
    est.extrapolated = false;
    return est;
  }
  // Least squares of p_L against L^{-3/4} (from the correlation-length
  // exponent nu = 4/3); the intercept is the threshold estimate.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(Ls.size());
  for (size_t i = 0; i < Ls.size(); ++i) {
    double x = std::pow(static_cast<double>(Ls[i]), -0.75);
    double y = est.per_size[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  double slope = denom != 0 ? (n * sxy - sx * sy) / denom : 0.0;
  est.estimate = (sy - slope * sx) / n;
  est.extrapolated = true;
  return est;
}

ComponentScalingResult largest_component_scaling(const std::vector<double>& ps,
                                                 const std::vector<int>& Ls, int trials,
                                                 std::uint64_t seed, int jobs) {
  for (double p : ps)
    if (!(p < 0.55))
      throw std::invalid_argument("largest_component_scaling: subcritical p < 0.55 required");
  ComponentScalingResult res;
  for (size_t pi = 0; pi < ps.size(); ++pi) {
    double p = ps[pi];
    std::vector<double> xs, ys;
    for (int L : Ls) {
      std::vector<double> largest(trials, 0.0);
      parallel_trials(trials, jobs, [&](int t) {
        auto grid = sample_grid({L, p, trial_seed(seed, L, static_cast<int>(pi), t)});
        auto comps = connected_components(grid_to_graph(grid));
        size_t big = 0;
        for (const auto& c : comps) big = std::max(big, c.size());
        largest[t] = static_cast<double>(big);
      });
      ComponentScalingRow row;
      row.L = L;
      row.p = p;
      row.trials = trials;
      row.mean_largest = mean_of(largest);
      row.max_largest = static_cast<int>(*std::max_element(largest.begin(), largest.end()));
      res.rows.push_back(row);
      xs.push_back(std::log(static_cast<double>(L) * L));
      ys.push_back(row.mean_largest);
    }
    // mean largest ~ a + b ln N
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
      syy += ys[i] * ys[i];
    }
    ComponentScalingResult::Fit fit;
    fit.p = p;
    double denom = n * sxx - sx * sx;
    fit.slope = denom != 0 ? (n * sxy - sx * sy) / denom : 0.0;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ss_res += e * e;
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    res.fits.push_back(fit);
  }
  return res;
}

void BoundParams::validate() const {
  if (!(eps > 0)) throw std::domain_error("BoundParams: eps > 0 required");
  if (!(p - kPc > eps)) throw std::domain_error("BoundParams: p - p_c > eps required");
  if (!(beta >= 0)) throw std::domain_error("BoundParams: beta >= 0 required");
}

double gamma_epsilon(const BoundParams& b) {
  b.validate();
  return b.alpha - b.beta * std::log(b.p / (b.p - kPc - b.eps));
}

BetaScanResult optimal_beta(double alpha, double p, const std::vector<double>& eps_grid) {
  BetaScanResult best;
  for (double eps : eps_grid) {
    if (!(eps > 0) || !(p - kPc > eps)) continue;
    double denom = std::log(p / (p - kPc - eps));
    if (!(denom > 0)) continue;
    double beta = alpha / denom;  // supremum keeping gamma_eps >= 0
    if (beta > best.best_beta) {
      best.best_beta = beta;
      best.best_eps = eps;
    }
  }
  return best;
}

std::vector<RuntimeRow> runtime_scaling(const std::vector<double>& ps,
                                        const std::vector<int>& Ls, int trials,
                                        std::uint64_t seed) {
  for (double p : ps)
    if (!(p > kPc)) throw std::invalid_argument("runtime_scaling: supercritical p required");
  std::vector<RuntimeRow> rows;
  for (size_t pi = 0; pi < ps.size(); ++pi) {
    for (int L : Ls) {
      RuntimeRow row;
      row.L = L;
      row.p = ps[pi];
      row.trials = trials;
      double work = 0, visits = 0, occupied = 0;
      for (int t = 0; t < trials; ++t) {
        auto grid = sample_grid({L, ps[pi], trial_seed(seed, L, static_cast<int>(pi), t)});
        auto graph = grid_to_graph(grid);
        PipelineResult pipe = run_identification(graph);
        work += static_cast<double>(pipe.work.total());
        visits += static_cast<double>(pipe.work.rhwf_visits);
        occupied += graph.n_occupied;
        if (pipe.work.rhwf_visits > 4ull * static_cast<std::uint64_t>(graph.n_occupied))
          row.visit_budget_ok = false;
      }
      row.mean_work = work / std::max(1, trials);
      row.work_per_site = row.mean_work / (static_cast<double>(L) * L);
      row.mean_rhwf_visits = visits / std::max(1, trials);
      row.mean_occupied = occupied / std::max(1, trials);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace hexforge
