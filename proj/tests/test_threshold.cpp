#include "hfactor/corpus.hpp"
#include "hfactor/threshold.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace hfactor;

namespace {

SimulationSpec spec_for(const char* name, std::int64_t trials, std::uint64_t seed = 1)
{
    SimulationSpec s;
    s.pattern = corpus_pattern(name);
    s.trials = trials;
    s.master_seed = seed;
    return s;
}

}  // namespace

TEST_CASE("Wilson interval")
{
    auto a = wilson(0, 10, 0.95);
    CHECK(a.lo == 0.0);
    CHECK(a.hi == doctest::Approx(0.2775).epsilon(1e-3));
    auto b = wilson(10, 10, 0.95);
    CHECK(b.hi == 1.0);
    CHECK(b.lo == doctest::Approx(1 - 0.2775).epsilon(1e-3));
    auto c = wilson(50, 100, 0.99);
    CHECK(c.lo < 0.5);
    CHECK(c.hi > 0.5);
    CHECK(c.hi - 0.5 == doctest::Approx(0.5 - c.lo));
    CHECK_THROWS_AS(wilson(11, 10), SimulationError);
}

TEST_CASE("success probability endpoints")
{
    auto s = spec_for("k2", 50);
    auto one = estimate_success_prob(s, 6, 1.0);
    CHECK(one.p_hat == 1.0);
    CHECK(one.successes == 50);
    auto zero = estimate_success_prob(spec_for("k3", 20), 9, 0.0);
    CHECK(zero.p_hat == 0.0);
    CHECK_THROWS_AS(estimate_success_prob(s, 7, 0.5), SimulationError);
    s.trials = 0;
    CHECK_THROWS_AS(estimate_success_prob(s, 6, 0.5), SimulationError);
}

TEST_CASE("K2 on six vertices matches the exhaustive probability")
{
    auto hist = oracle::matching_edge_histogram(6);
    const double exact = oracle::matching_probability(hist, 0.5);
    auto row = estimate_success_prob(spec_for("k2", 1000, 8), 6, 0.5);
    CAPTURE(exact);
    CAPTURE(row.p_hat);
    CHECK(row.interval.lo <= exact);
    CHECK(exact <= row.interval.hi);
}

TEST_CASE("parallel and serial trials agree, and reruns are identical")
{
    auto s = spec_for("k3", 60, 5);
    auto a = estimate_success_prob(s, 12, 0.45);
    s.parallel = false;
    auto b = estimate_success_prob(s, 12, 0.45);
    CHECK(a.successes == b.successes);
    CHECK(a.p_hat == b.p_hat);
    auto c = estimate_success_prob(s, 12, 0.45);
    CHECK(c.successes == b.successes);
}

TEST_CASE("coupled trials make success monotone in p")
{
    auto s = spec_for("k3", 80, 2);
    std::int64_t last = -1;
    for (double p : {0.2, 0.35, 0.5, 0.65, 0.8}) {
        auto row = estimate_success_prob(s, 12, p);
        CHECK(row.successes >= last);
        last = row.successes;
    }
}

TEST_CASE("budget-exhausted trials are excluded and reported")
{
    auto s = spec_for("k3", 40, 3);
    s.search.node_budget = 2;
    bool threw = false;
    try {
        auto row = estimate_success_prob(s, 27, 0.4);
        CHECK(row.budget_exhausted > 0);
        CHECK(row.successes + row.budget_exhausted <= row.trials);
        CHECK(row.p_hat == doctest::Approx(static_cast<double>(row.successes) /
                                           static_cast<double>(row.trials - row.budget_exhausted)));
    } catch (const SimulationError&) {
        threw = true;
    }
    if (threw) {
        s.trials = 1;
        CHECK_THROWS_AS(estimate_success_prob(s, 27, 0.4), SimulationError);
    }
}

TEST_CASE("bisection brackets the exact K2 half point")
{
    auto hist = oracle::matching_edge_histogram(6);
    const double exact = oracle::matching_half_point(hist);
    auto hp = bisect_half_point(spec_for("k2", 1000, 4), 6);
    CAPTURE(exact);
    CAPTURE(hp.p50);
    CHECK_FALSE(hp.lower_bound);
    CHECK(hp.confidence_bracket.lo <= exact);
    CHECK(exact <= hp.confidence_bracket.hi);
    CHECK(hp.bracket.lo <= hp.p50);
    CHECK(hp.p50 <= hp.bracket.hi);
    CHECK(hp.probes.size() == 10);
}

TEST_CASE("bisection on K3 with 400 trials per probe is narrow")
{
    auto hp = bisect_half_point(spec_for("k3", 400, 6), 12);
    CHECK(hp.bracket.hi - hp.bracket.lo <= 0.05);
    CHECK(hp.p50 > 0.1);
    CHECK(hp.p50 < 0.9);
}

TEST_CASE("bisection flags a half point below the smallest probe")
{
    SimulationSpec s;
    s.pattern = PatternGraph(2);
    s.trials = 10;
    auto hp = bisect_half_point(s, 4, 6);
    CHECK(hp.lower_bound);
    CHECK(hp.p50 == std::ldexp(1.0, -6));
}

TEST_CASE("scaling study bookkeeping")
{
    auto one = scaling_study(spec_for("k3", 40, 1), {9}, 4);
    CHECK_FALSE(one.fit);
    CHECK(one.half_points.size() == 1);
    CHECK(one.ratio.size() == 1);
    CHECK_THROWS_AS(scaling_study(spec_for("k3", 40, 1), {12, 9}, 4), SimulationError);

    auto fit = least_squares({0, 1, 2}, {1, 3, 5});
    CHECK(fit.slope == doctest::Approx(2.0));
    CHECK(fit.intercept == doctest::Approx(1.0));
    CHECK_THROWS_AS(least_squares({1, 1}, {0, 1}), SimulationError);
}

TEST_CASE("partitioned model trials")
{
    auto s = spec_for("k3", 30, 9);
    s.model = Model::partitioned;
    CHECK(estimate_success_prob(s, 9, 1.0).p_hat == 1.0);
    auto row = estimate_success_prob(s, 9, 0.5);
    CHECK(row.p_hat < 1.0);
}
