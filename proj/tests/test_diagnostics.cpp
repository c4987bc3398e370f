#include "hfactor/corpus.hpp"
#include "hfactor/diagnostics.hpp"
#include "hfactor/random_models.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

using namespace hfactor;

namespace {

/// G - Z rebuilt by hand, for the naive recomputation.
HostGraph without(const HostGraph& g, const std::vector<int>& z)
{
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::find(z.begin(), z.end(), v) == z.end())
            keep.push_back(v);
    auto pos = [&](int v) { return static_cast<int>(std::find(keep.begin(), keep.end(), v) - keep.begin()); };
    HostGraph out(static_cast<int>(keep.size()), g.kind());
    for (int a : keep)
        for (int b : keep)
            if (a < b && g.multiplicity(a, b) > 0)
                out.add_edge(pos(a), pos(b), g.multiplicity(a, b));
    std::vector<std::vector<int>> classes;
    for (const auto& part : g.parts()) {
        std::vector<int> c;
        for (int v : part)
            if (std::find(z.begin(), z.end(), v) == z.end())
                c.push_back(pos(v));
        classes.push_back(c);
    }
    out.set_partition(classes);
    return out;
}

/// Every transversal of the host, brute force.
std::vector<std::vector<int>> transversals(const HostGraph& g)
{
    std::vector<std::vector<int>> out{{}};
    for (const auto& part : g.parts()) {
        std::vector<std::vector<int>> next;
        for (const auto& z : out)
            for (int v : part) {
                auto e = z;
                e.push_back(v);
                next.push_back(e);
            }
        out = next;
    }
    return out;
}

HostGraph thinned_blowup(const PatternGraph& h, int r, double p, std::uint64_t seed)
{
    return sample_partitioned(h, r, p, seed);
}

void check_against_naive(const HostGraph& g, const PatternGraph& h, double p)
{
    auto rep = property_report(g, h, p);
    const long long phi = oracle::set_partition_phi(g, h);
    CHECK(rep.phi == phi);
    const int k = h.vertex_count();
    const int n = g.vertex_count();
    const int r = g.class_size();

    double dp = std::pow(static_cast<double>(r), k - 1) * std::pow(p, h.total_multiplicity());
    CHECK(rep.D_p == doctest::Approx(dp));

    long long copies = 0;
    long long weight_sum = 0;
    long long max_w = 0;
    double dev = 0;
    std::vector<long long> through(n, 0);
    std::map<std::vector<int>, long long> w;
    for (const auto& z : transversals(g)) {
        w[z] = oracle::set_partition_phi(without(g, z), h);
        if (oracle::realizes(g, h, z)) {
            ++copies;
            weight_sum += w[z];
            max_w = std::max(max_w, w[z]);
            for (int v : z)
                ++through[v];
        }
    }
    for (int x = 0; x < n; ++x)
        dev = std::max(dev, std::abs(through[x] - dp) / dp);
    CHECK(rep.D_deviation_max == doctest::Approx(dev));
    CHECK(rep.weight_sum == weight_sum);
    CHECK(weight_sum == static_cast<long long>(n / k) * phi);
    if (phi > 0) {
        REQUIRE(rep.maxr_w);
        CHECK(*rep.maxr_w == doctest::Approx(static_cast<double>(max_w) * copies / weight_sum));
        CHECK(*rep.maxr_w >= 1.0 - 1e-12);
    } else {
        CHECK_FALSE(rep.maxr_w);
    }

    std::size_t violations = 0;
    const double scale = std::pow(static_cast<double>(n), 2.0 * (k - 1));
    for (int missing = 0; missing < k; ++missing) {
        std::map<std::vector<int>, std::vector<long long>> groups;
        for (const auto& [z, wz] : w) {
            auto y = z;
            y.erase(y.begin() + missing);
            groups[y].push_back(wz);
        }
        for (auto& [y, vals] : groups) {
            std::sort(vals.begin(), vals.end());
            long long top = vals.back();
            long long med = vals[(vals.size() - 1) / 2];
            if (top * scale > static_cast<double>(phi) && top > 2 * med)
                ++violations;
        }
    }
    CHECK(rep.C_violations.size() == violations);
}

}  // namespace

TEST_CASE("weight examples")
{
    auto k2 = corpus_pattern("k2");
    auto k3 = corpus_pattern("k3");
    auto b22 = blowup_pattern(k2, 2);
    CHECK(weight_w(b22, k2, {0, 2}) == 1);
    CHECK_THROWS_AS(weight_w(b22, k2, {0, 1}), DiagnosticsError);
    auto b32 = blowup_pattern(k3, 2);
    for (const auto& z : transversals(b32))
        CHECK(weight_w(b32, k3, z) == 1);
    // Partial Y sums over the missing class.
    CHECK(weight_w(b32, k3, {0, 2}) == 2);
    CHECK_THROWS_AS(weight_w(sample_gnp(4, 1.0, 0), k2, {0, 1}), DiagnosticsError);
}

TEST_CASE("weight tables agree serial and parallel")
{
    auto h = corpus_pattern("k3");
    auto g = thinned_blowup(h, 3, 0.8, 12);
    auto a = weight_table(g, h);
    auto b = weight_table_parallel(g, h);
    REQUIRE(a.size() == 27);
    REQUIRE(b.size() == 27);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].z == b[i].z);
        CHECK(a[i].w == b[i].w);
    }
}

TEST_CASE("entropy examples")
{
    auto k2 = corpus_pattern("k2");
    auto k3 = corpus_pattern("k3");
    auto b32 = blowup_pattern(k3, 2);
    CHECK(factor_entropy(b32, k3, 0) == doctest::Approx(std::log(4.0)));
    auto b23 = blowup_pattern(k2, 3);
    CHECK(factor_entropy(b23, k2, 1) == doctest::Approx(std::log(3.0)));

    auto unique = blowup_pattern(k2, 1);
    CHECK(factor_entropy(unique, k2, 0) == doctest::Approx(0.0));
    HostGraph bare(4);
    bare.set_partition({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(factor_entropy(bare, k2, 0), DiagnosticsError);
}

TEST_CASE("Shearer examples")
{
    auto k2 = corpus_pattern("k2");
    auto k3 = corpus_pattern("k3");
    auto a = shearer_check(blowup_pattern(k3, 2), k3, 0);
    CHECK(a.lhs == doctest::Approx(std::log(4.0)));
    CHECK(a.rhs == doctest::Approx(2 * std::log(4.0)));
    CHECK(a.holds);
    auto b = shearer_check(blowup_pattern(k2, 3), k2, 0);
    CHECK(b.lhs == doctest::Approx(std::log(6.0)));
    CHECK(b.rhs == doctest::Approx(3 * std::log(3.0)));
    CHECK(b.holds);
    auto c = shearer_check(blowup_pattern(k2, 1), k2, 1);
    CHECK(c.lhs == doctest::Approx(0.0));
    CHECK(c.rhs == doctest::Approx(0.0));
    CHECK(c.holds);
}

TEST_CASE("entropy never exceeds log of the copies through y")
{
    std::mt19937_64 rng(3);
    auto h = corpus_pattern("k3");
    int tested = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto g = thinned_blowup(h, 3, 0.8, rng());
        if (count_factors(g, h) == 0)
            continue;
        auto rep = property_report(g, h, 0.8);
        for (int y = 0; y < g.vertex_count(); ++y)
            CHECK(factor_entropy(g, h, y) <= std::log(static_cast<double>(rep.copies_through[y])) + 1e-9);
        ++tested;
    }
    CHECK(tested > 5);
}

TEST_CASE("property report on the complete blowup of K2")
{
    auto k2 = corpus_pattern("k2");
    auto rep = property_report(blowup_pattern(k2, 2), k2, 1.0);
    CHECK(rep.phi == 2);
    CHECK(rep.D_p == 2.0);
    CHECK(rep.D_deviation_max == 0.0);
    REQUIRE(rep.maxr_w);
    CHECK(*rep.maxr_w == doctest::Approx(1.0));
    CHECK(rep.C_violations.empty());
    CHECK(rep.A_reference == doctest::Approx(0.5 * 4 * std::log(4.0)));
}

TEST_CASE("property report without factors")
{
    auto k2 = corpus_pattern("k2");
    HostGraph bare(4);
    bare.set_partition({{0, 1}, {2, 3}});
    auto rep = property_report(bare, k2, 0.5);
    CHECK(rep.phi == 0);
    CHECK_FALSE(rep.maxr_w);
    CHECK(rep.C_violations.empty());
    CHECK(std::isinf(rep.log_phi));
}

TEST_CASE("property report matches a naive recomputation")
{
    auto k3 = corpus_pattern("k3");
    auto b = blowup_pattern(k3, 2);
    HostGraph cut(6);
    for (const auto& e : b.edges())
        if (!(e.u == 0 && e.v == 2))
            cut.add_edge(e.u, e.v);
    cut.set_partition(b.parts());
    check_against_naive(cut, k3, 1.0);

    std::mt19937_64 rng(44);
    for (const char* name : {"k2", "k3", "double-edge"}) {
        auto h = corpus_pattern(name);
        for (int trial = 0; trial < 6; ++trial) {
            const int r = name == std::string("k3") ? 2 + static_cast<int>(rng() % 3) : 2 + static_cast<int>(rng() % 5);
            CAPTURE(name);
            auto g = thinned_blowup(h, r, 0.7, rng());
            check_against_naive(g, h, 0.7);
            auto par = property_report_parallel(g, h, 0.7);
            CHECK(par.phi == property_report(g, h, 0.7).phi);
            CHECK(par.C_violations.size() == property_report(g, h, 0.7).C_violations.size());
        }
    }
}

TEST_CASE("lower median")
{
    CHECK(lower_median({BigInt(4), BigInt(1), BigInt(3), BigInt(2)}) == 2);
    CHECK(lower_median({BigInt(5)}) == 5);
    CHECK_THROWS_AS(lower_median({}), DiagnosticsError);
    CHECK(log_big(BigInt(1) << 2000) == doctest::Approx(2000 * std::log(2.0)));
}
