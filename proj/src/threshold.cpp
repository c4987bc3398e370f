#include "hfactor/threshold.hpp"

#include <boost/math/distributions/normal.hpp>
#include <omp.h>

#include <cmath>
#include <limits>

namespace hfactor {

Interval wilson(std::int64_t successes, std::int64_t trials, double confidence)
{
    if (trials <= 0)
        return {0.0, 1.0};
    if (successes < 0 || successes > trials)
        throw SimulationError("successes must lie in [0, trials]");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw SimulationError("confidence must lie in (0,1)");
    const double z = boost::math::quantile(boost::math::normal(), 1.0 - (1.0 - confidence) / 2.0);
    const double n = static_cast<double>(trials);
    const double phat = successes / n;
    const double z2 = z * z;
    const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    return {successes == 0 ? 0.0 : std::max(0.0, centre - half),
            successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

namespace {

SearchStatus run_trial(const SimulationSpec& spec, int n, double p, std::int64_t i)
{
    const std::uint64_t seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(i));
    HostGraph host = spec.model == Model::partitioned
                         ? sample_partitioned(spec.pattern, n / spec.pattern.vertex_count(), p, seed)
                         : sample_gnp(n, p, seed);
    if (spec.two_phase) {
        TwoPhaseOptions opts;
        opts.search = spec.search;
        opts.split = spec.split;
        opts.p = p;
        return two_phase_factor(host, spec.pattern, derive_seed(seed, 2), opts).status;
    }
    return find_factor(host, spec.pattern, spec.search).status;
}

}  // namespace

CurveRow estimate_success_prob(const SimulationSpec& spec, int n, double p)
{
    if (spec.trials < 1)
        throw SimulationError("need at least one trial");
    if (spec.model == Model::digraph)
        throw SimulationError("simulation supports the gnp and partitioned models");
    const int k = spec.pattern.vertex_count();
    if (k == 0 || n < 0 || n % k != 0)
        throw SimulationError("n = " + std::to_string(n) + " is not divisible by v_H = " + std::to_string(k));
    if (spec.two_phase && spec.model != Model::gnp)
        throw SimulationError("two-phase search runs on the gnp model");
    if (!(p >= 0.0 && p <= 1.0))
        throw SimulationError("p must lie in [0,1]");

    std::vector<SearchStatus> outcome(spec.trials);
#pragma omp parallel for schedule(dynamic) if (spec.parallel)
    for (std::int64_t i = 0; i < spec.trials; ++i)
        outcome[i] = run_trial(spec, n, p, i);

    CurveRow row;
    row.n = n;
    row.p = p;
    row.trials = spec.trials;
    for (auto s : outcome) {
        row.successes += s == SearchStatus::found;
        row.budget_exhausted += s == SearchStatus::budget;
    }
    const std::int64_t decided = row.trials - row.budget_exhausted;
    if (decided == 0)
        throw SimulationError("every trial exhausted the search budget");
    row.p_hat = static_cast<double>(row.successes) / static_cast<double>(decided);
    row.interval = wilson(row.successes, decided, spec.confidence);
    return row;
}

HalfPoint bisect_half_point(const SimulationSpec& spec, int n, int depth)
{
    if (depth < 1)
        throw SimulationError("bisection depth must be positive");
    HalfPoint hp;
    auto probe = [&](double p) {
        hp.probes.push_back(estimate_success_prob(spec, n, p));
        return hp.probes.back();
    };

    if (probe(1.0).p_hat < 0.5)
        throw SimulationError("success probability stays below 1/2 at p = 1; no half point to bracket");
    const double floor = std::ldexp(1.0, -depth);
    auto bottom = probe(floor);
    if (bottom.p_hat >= 0.5) {
        hp.lower_bound = true;
        hp.p50 = floor;
        hp.bracket = {0.0, floor};
        hp.confidence_bracket = {0.0, floor};
        return hp;
    }

    double lo = floor;
    double hi = 1.0;
    hp.confidence_bracket = {bottom.interval.hi < 0.5 ? floor : 0.0, 1.0};
    for (int step = 0; step < depth; ++step) {
        double mid = (lo + hi) / 2;
        auto row = probe(mid);
        if (row.p_hat >= 0.5)
            hi = mid;
        else
            lo = mid;
        if (row.interval.hi < 0.5)
            hp.confidence_bracket.lo = std::max(hp.confidence_bracket.lo, mid);
        if (row.interval.lo > 0.5)
            hp.confidence_bracket.hi = std::min(hp.confidence_bracket.hi, mid);
    }
    hp.bracket = {lo, hi};
    hp.p50 = (lo + hi) / 2;
    return hp;
}

ScalingFit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw SimulationError("least squares needs at least two points");
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0)
        throw SimulationError("least squares needs two distinct x values");
    ScalingFit f;
    f.slope = (m * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / m;
    return f;
}

ScalingStudy scaling_study(const SimulationSpec& spec, const std::vector<int>& n_list, int depth)
{
    if (n_list.empty())
        throw SimulationError("empty n list");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw SimulationError("n list must be strictly increasing");

    std::optional<ThresholdDescriptor> shape;
    try {
        shape = threshold_descriptor(spec.pattern);
    } catch (const DensityError&) {
    }

    ScalingStudy study;
    study.n_list = n_list;
    std::vector<double> xs, ys;
    for (int n : n_list) {
        auto hp = bisect_half_point(spec, n, depth);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        study.ratio.push_back(shape ? hp.p50 / shape->evaluate(n) : nan);
        study.ratio_no_log.push_back(
            shape ? hp.p50 / std::pow(static_cast<double>(n), static_cast<double>(shape->density_exponent)) : nan);
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(hp.p50));
        study.half_points.push_back(std::move(hp));
    }
    if (n_list.size() >= 2)
        study.fit = least_squares(xs, ys);
    return study;
}

}  // namespace hfactor
