#pragma once

#include <cstdint>
#include <vector>

#include "hexforge/flow.hpp"
#include "hexforge/lattice.hpp"

namespace hexforge {

// Square-lattice site percolation threshold.
inline constexpr double kPc = 0.592746;

struct SweepConfig {
  std::vector<int> Ls;
  std::vector<double> ps;
  int trials = 1;
  std::uint64_t master_seed = 0;
  int jobs = 1;

  void validate() const;
};

struct CurvePoint {
  int L = 0;
  double p = 0;
  double estimate = 0;
  double stderr_ = 0;
  int trials = 0;
  double achieved_pipeline_count = 0;  // mean H-path count from the 2-local finder
};

// Per-trial seeds derive from (master_seed, L, p_index, trial), so coupled
// sampling across p at a fixed p_index shares every site draw.
std::uint64_t trial_seed(std::uint64_t master, int L, int p_index, int trial);

// Fraction of sampled grids containing an H-crossing, with binomial stderr.
CurvePoint crossing_probability(int L, double p, int trials, std::uint64_t seed,
                                int p_index = 0, int jobs = 1);

// True iff the grid has an H-crossing (multi-source BFS, no flow machinery).
bool has_h_crossing(const OccupancyGrid& grid);

// E[m_L]/L per (L,p) plus the achieved 2-local H-path count.
std::vector<CurvePoint> overhead_curve(const SweepConfig& sweep);

struct ThresholdEstimate {
  double estimate = 0;                 // extrapolated across sizes
  std::vector<int> Ls;
  std::vector<double> per_size;        // p at which the crossing probability is 1/2
  bool extrapolated = false;           // false when only one size was given
};

// Bisection on p for crossing probability 1/2 at each size (the coupled
// empirical curve is exactly monotone), then a least-squares extrapolation
// in L^{-3/4} across sizes.
ThresholdEstimate estimate_threshold(const std::vector<int>& Ls, int trials,
                                     std::uint64_t seed, int jobs = 1);

struct ComponentScalingRow {
  int L = 0;
  double p = 0;
  double mean_largest = 0;
  int max_largest = 0;
  int trials = 0;
};

struct ComponentScalingResult {
  std::vector<ComponentScalingRow> rows;
  // Regression of mean largest-component size against ln N per probability.
  struct Fit {
    double p = 0;
    double intercept = 0;
    double slope = 0;
    double r_squared = 0;
  };
  std::vector<Fit> fits;
};

ComponentScalingResult largest_component_scaling(const std::vector<double>& ps,
                                                 const std::vector<int>& Ls, int trials,
                                                 std::uint64_t seed, int jobs = 1);

struct BoundParams {
  double alpha = 0;  // alpha(p_c + eps), supplied
  double beta = 0;   // spatial overhead
  double p = 0;
  double eps = 0;

  void validate() const;  // p - p_c > eps > 0, beta >= 0
};

// Reduced exponent alpha(p_c+eps) - beta * log(p / (p - p_c - eps)).
double gamma_epsilon(const BoundParams& b);

// Largest beta keeping the exponent positive, maximized over an eps grid;
// returns the best (eps, beta) pair.
struct BetaScanResult {
  double best_eps = 0;
  double best_beta = 0;
};
BetaScanResult optimal_beta(double alpha, double p, const std::vector<double>& eps_grid);

struct RuntimeRow {
  int L = 0;
  double p = 0;
  int trials = 0;
  double mean_work = 0;           // deterministic pipeline work counter
  double work_per_site = 0;       // mean_work / N
  double mean_rhwf_visits = 0;
  double mean_occupied = 0;
  bool visit_budget_ok = true;    // rhwf visits <= 4 * occupied on every run
};

std::vector<RuntimeRow> runtime_scaling(const std::vector<double>& ps,
                                        const std::vector<int>& Ls, int trials,
                                        std::uint64_t seed);

}  // namespace hexforge
