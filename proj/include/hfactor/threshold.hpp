#pragma once

#include "hfactor/factor.hpp"
#include "hfactor/random_models.hpp"
#include "hfactor/two_phase.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfactor {

class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

inline constexpr double kDefaultConfidence = 0.99;

/// Wilson score interval for `successes` out of `trials`.
Interval wilson(std::int64_t successes, std::int64_t trials, double confidence = kDefaultConfidence);

struct CurveRow {
    int n = 0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::int64_t budget_exhausted = 0;
    /// successes / (trials - budget_exhausted).
    double p_hat = 0.0;
    Interval interval;
};

struct SimulationSpec {
    PatternGraph pattern;
    /// gnp or partitioned; n is the host vertex count either way.
    Model model = Model::gnp;
    std::int64_t trials = 100;
    std::uint64_t master_seed = 0;
    SearchOptions search;
    bool two_phase = false;
    ShareSplit split = ShareSplit::disjoint;
    double confidence = kDefaultConfidence;
    bool parallel = true;
};

/// Trial i samples its host from derive_seed(master_seed, i).
CurveRow estimate_success_prob(const SimulationSpec& spec, int n, double p);

struct HalfPoint {
    double p50 = 0.0;
    /// Bisection bracket: p_hat(lo) < 1/2 <= p_hat(hi).
    Interval bracket;
    /// Tightest probes whose confidence intervals exclude 1/2 on either side.
    Interval confidence_bracket;
    /// p_hat already exceeded 1/2 at the smallest probe.
    bool lower_bound = false;
    std::vector<CurveRow> probes;
};

inline constexpr int kDefaultBisectionDepth = 8;

HalfPoint bisect_half_point(const SimulationSpec& spec, int n, int depth = kDefaultBisectionDepth);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
};

struct ScalingStudy {
    std::vector<int> n_list;
    std::vector<HalfPoint> half_points;
    /// p50(n) / f(n) for the threshold descriptor of the pattern.
    std::vector<double> ratio;
    /// p50(n) / n^{density exponent}, without the log factor.
    std::vector<double> ratio_no_log;
    /// Least-squares fit of log p50 against log n; absent for a single n.
    std::optional<ScalingFit> fit;
};

ScalingStudy scaling_study(const SimulationSpec& spec, const std::vector<int>& n_list,
                           int depth = kDefaultBisectionDepth);

ScalingFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hfactor
