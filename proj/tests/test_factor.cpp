#include "hfactor/corpus.hpp"
#include "hfactor/factor.hpp"
#include "hfactor/random_models.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hfactor;

namespace {

HostGraph complete(int n)
{
    return sample_gnp(n, 1.0, 0);
}

HostGraph cycle(int n)
{
    HostGraph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

/// A random small host for the pattern: unpartitioned G(n,p) or a thinned blowup.
HostGraph random_host(const PatternGraph& h, bool partitioned, std::mt19937_64& rng)
{
    const int k = h.vertex_count();
    const double p = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    if (partitioned) {
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(12 / k));
        return sample_partitioned(h, r, p, rng());
    }
    const int blocks = 1 + static_cast<int>(rng() % static_cast<unsigned>(12 / k));
    return sample_gnp(blocks * k, p, rng());
}

}  // namespace

TEST_CASE("copy enumeration examples")
{
    auto k3 = corpus_pattern("k3");
    auto all = enumerate_copies(complete(6), k3);
    CHECK(all.total() == 20);
    for (int x = 0; x < 6; ++x)
        CHECK(all.count_through(x) == 10);
    CHECK(enumerate_copies(complete(6), k3, 0).total() == 10);
    CHECK(enumerate_copies(blowup_pattern(k3, 2), k3).total() == 8);
    CHECK_THROWS_AS(enumerate_copies(complete(8), k3, std::nullopt, 10), CopyLimitError);
    CHECK_THROWS_AS(enumerate_copies(blowup_pattern(k3, 2), corpus_pattern("k2")), FactorError);
}

TEST_CASE("copy enumeration agrees with brute force, anchored or not")
{
    std::mt19937_64 rng(21);
    for (const char* name : {"k2", "k3", "triangle-plus-isolated", "path", "double-edge"}) {
        auto h = corpus_pattern(name);
        for (int trial = 0; trial < 8; ++trial) {
            for (bool part : {false, true}) {
                HostGraph g = random_host(h, part, rng);
                if (h.kind() == GraphKind::multi && !part)
                    continue;
                CAPTURE(name);
                CAPTURE(serialize(g));
                auto idx = enumerate_copies(g, h);
                CHECK(idx.total() == oracle::brute_copy_count(g, h));
                const int x = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
                auto anchored = enumerate_copies(g, h, x);
                CHECK(anchored.total() == idx.count_through(x));
                CHECK(anchored.total() == oracle::brute_copy_count(g, h, x));
            }
        }
    }
}

TEST_CASE("find_factor examples")
{
    auto k3 = corpus_pattern("k3");
    auto r = find_factor(complete(6), k3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.factor->copies.size() == 2);
    CHECK_FALSE(validate_factor(complete(6), k3, *r.factor, true));

    CHECK(find_factor(cycle(6), k3).status == SearchStatus::absent);

    auto k2 = corpus_pattern("k2");
    auto b = blowup_pattern(k2, 3);
    auto m = find_factor(b, k2);
    REQUIRE(m.status == SearchStatus::found);
    for (const auto& c : m.factor->copies) {
        CHECK(b.class_of(c[0]) == 0);
        CHECK(b.class_of(c[1]) == 1);
    }

    CHECK_THROWS_AS(find_factor(complete(7), k3), FactorError);

    SearchOptions tiny;
    tiny.node_budget = 1;
    CHECK(find_factor(sample_gnp(30, 0.5, 3), k3, tiny).status == SearchStatus::budget);
}

TEST_CASE("count_factors examples")
{
    auto k3 = corpus_pattern("k3");
    auto k2 = corpus_pattern("k2");
    CHECK(count_factors(complete(6), k3) == 10);
    CHECK(count_factors(blowup_pattern(k2, 3), k2) == 6);
    CHECK(count_factors(blowup_pattern(k3, 2), k3) == 4);
    CHECK(count_factors(cycle(6), k3) == 0);
    CHECK(count_factors(complete(8), corpus_pattern("triangle-plus-isolated")) == 560);
    CHECK(oracle::set_partition_phi(complete(8), corpus_pattern("triangle-plus-isolated")) == 560);
    CHECK_THROWS_AS(count_factors(complete(27), k3), FactorError);
}

TEST_CASE("count_factors and find_factor agree with the set-partition oracle")
{
    std::mt19937_64 rng(99);
    for (const char* name : {"k2", "k3", "triangle-plus-isolated"}) {
        auto h = corpus_pattern(name);
        for (int trial = 0; trial < 12; ++trial) {
            for (bool part : {false, true}) {
                HostGraph g = random_host(h, part, rng);
                CAPTURE(name);
                CAPTURE(serialize(g));
                const long long expect = oracle::set_partition_phi(g, h);
                CHECK(count_factors(g, h) == expect);
                auto r = find_factor(g, h);
                CHECK((r.status == SearchStatus::found) == (expect > 0));
                if (r.factor)
                    CHECK_FALSE(validate_factor(g, h, *r.factor, true));
            }
        }
    }
}

TEST_CASE("multigraph patterns need distinct host edges per slot")
{
    auto dbl = corpus_pattern("double-edge");
    HostGraph g(4, GraphKind::multi);
    g.add_edge(0, 1, 2);
    g.add_edge(2, 3, 1);
    CHECK(enumerate_copies(g, dbl).total() == 1);
    CHECK(find_factor(g, dbl).status == SearchStatus::absent);
    g.add_edge(2, 3, 1);
    CHECK(count_factors(g, dbl) == 1);
}

TEST_CASE("validator rejects overlap, missing edges and wrong classes")
{
    auto k2 = corpus_pattern("k2");
    auto g = complete(4);
    FactorAssignment ok{{{0, 1}, {2, 3}}, {}};
    CHECK_FALSE(validate_factor(g, k2, ok, true));
    FactorAssignment overlap{{{0, 1}, {1, 2}}, {3}};
    CHECK(validate_factor(g, k2, overlap, false));
    FactorAssignment partial{{{0, 1}}, {2, 3}};
    CHECK_FALSE(validate_factor(g, k2, partial, false));
    CHECK(validate_factor(g, k2, partial, true));
    FactorAssignment missing{{{0, 1}, {2, 3}}, {}};
    CHECK(validate_factor(cycle(4), k2, FactorAssignment{{{0, 2}, {1, 3}}, {}}, true));
    CHECK_FALSE(validate_factor(cycle(4), k2, missing, true));
    auto b = blowup_pattern(k2, 2);
    CHECK(validate_factor(b, k2, FactorAssignment{{{2, 0}, {3, 1}}, {}}, true));
}

TEST_CASE("partial_factor")
{
    auto k3 = corpus_pattern("k3");
    auto full = partial_factor(complete(12), k3, 0.1, 1);
    CHECK(full.target_met);
    CHECK(full.assignment.uncovered.empty());

    auto none = partial_factor(HostGraph(9), k3, 0.5, 1);
    CHECK_FALSE(none.target_met);
    CHECK(none.assignment.copies.empty());
    CHECK_THROWS_AS(partial_factor(complete(6), k3, 1.0, 1), FactorError);

    const int n = 300;
    const double p = 5.0 * std::pow(n, -2.0 / 3.0);
    int met = 0;
    for (int seed = 0; seed < 20; ++seed) {
        auto g = sample_gnp(n, p, derive_seed(31, seed));
        auto r = partial_factor(g, k3, 0.25, seed);
        CHECK_FALSE(validate_factor(g, k3, r.assignment, false));
        met += r.target_met;
    }
    CHECK(met >= 16);
}

TEST_CASE("th2 condition checkers")
{
    auto k3 = corpus_pattern("k3");
    auto a = check_th2(complete(6), k3);
    CHECK(a.cond1);
    CHECK(a.cond2);
    CHECK(a.role_counts == std::vector<int>{6, 6, 6});

    auto b = check_th2(cycle(6), k3);
    CHECK_FALSE(b.cond1);
    CHECK_FALSE(b.cond2);

    HostGraph two(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two.add_edge(u, v);
    auto c = check_th2(two, corpus_pattern("triangle-plus-isolated"));
    CHECK(c.cond1);
    CHECK(c.cond2);
    CHECK(c.role_counts == std::vector<int>{6, 6, 6, 6});
}

TEST_CASE("th2 conditions match a recomputation from the copy index")
{
    std::mt19937_64 rng(5);
    for (const char* name : {"k3", "path", "triangle-plus-isolated"}) {
        auto h = corpus_pattern(name);
        const auto autos = automorphisms(h);
        for (int trial = 0; trial < 10; ++trial) {
            auto g = sample_gnp(8, 0.45, rng());
            auto rep = check_th2(g, h);
            auto idx = enumerate_copies(g, h);
            bool cond1 = true;
            for (int x = 0; x < g.vertex_count(); ++x)
                cond1 = cond1 && idx.count_through(x) > 0;
            bool cond2 = true;
            for (int role = 0; role < h.vertex_count(); ++role) {
                std::set<int> players;
                for (const auto& c : idx.copies)
                    for (const auto& a : autos)
                        players.insert(c[a[role]]);
                cond2 = cond2 && static_cast<int>(players.size()) * h.vertex_count() >= g.vertex_count();
                CHECK(static_cast<int>(players.size()) == rep.role_counts[role]);
            }
            CHECK(rep.cond1 == cond1);
            CHECK(rep.cond2 == cond2);
        }
    }
}
