#include "hfactor/two_phase.hpp"

#include "hfactor/random_models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

namespace hfactor {

namespace {

constexpr std::uint64_t kTagShare = 0x7368617265;

/// Randomized first-fit packing of the multi-vertex pieces; singletons fill the rest.
std::optional<std::vector<int>> greedy_cover(const PiecePool& pool, std::mt19937_64& rng, int restarts)
{
    std::vector<int> wide;
    std::vector<int> single;
    std::vector<char> wide_type(pool.quota.size(), 0);
    for (int i = 0; i < static_cast<int>(pool.pieces.size()); ++i) {
        if (std::popcount(pool.pieces[i].mask) > 1) {
            wide.push_back(i);
            wide_type[pool.pieces[i].type] = 1;
        } else {
            single.push_back(i);
        }
    }
    const HostMask full = pool.vertex_count == 64 ? ~HostMask{0} : (HostMask{1} << pool.vertex_count) - 1;
    for (int round = 0; round < restarts; ++round) {
        std::shuffle(wide.begin(), wide.end(), rng);
        auto quota = pool.quota;
        HostMask covered = 0;
        std::vector<int> chosen;
        for (int i : wide) {
            const auto& p = pool.pieces[i];
            if (quota[p.type] > 0 && (p.mask & covered) == 0) {
                --quota[p.type];
                covered |= p.mask;
                chosen.push_back(i);
            }
        }
        bool done = true;
        for (std::size_t t = 0; t < quota.size(); ++t)
            done = done && (!wide_type[t] || quota[t] == 0);
        if (!done)
            continue;
        for (int i : single) {
            const auto& p = pool.pieces[i];
            if (quota[p.type] > 0 && (p.mask & covered) == 0) {
                --quota[p.type];
                covered |= p.mask;
                chosen.push_back(i);
            }
        }
        if (covered == full)
            return chosen;
    }
    return std::nullopt;
}

}  // namespace

std::pair<HostGraph, HostGraph> phase_shares(const HostGraph& g, std::uint64_t seed, const TwoPhaseOptions& options)
{
    if (options.split == ShareSplit::disjoint) {
        auto shares = split_edges(g, 2, seed);
        return {std::move(shares[0]), std::move(shares[1])};
    }
    if (!(options.p >= 0.0 && options.p <= 1.0))
        throw FactorError("overlapping split needs the host edge probability in [0,1]");
    if (g.total_multiplicity() == 0)
        return {g, g};
    if (options.p == 0.0)
        throw FactorError("overlapping split with p = 0 on a host that has edges");
    const double p = options.p;
    const double q = 1.0 - std::sqrt(1.0 - p);
    const double both = q * q / p;
    const double only_first = q * (1.0 - q) / p;

    HostGraph first(g.vertex_count(), g.kind());
    HostGraph second(g.vertex_count(), g.kind());
    for (const auto& e : g.edges())
        for (int slot = 0; slot < e.multiplicity; ++slot) {
            double u = counter_uniform(seed, kTagShare, e.u, e.v, slot);
            if (u < both) {
                first.add_edge(e.u, e.v);
                second.add_edge(e.u, e.v);
            } else if (u < both + only_first) {
                first.add_edge(e.u, e.v);
            } else {
                second.add_edge(e.u, e.v);
            }
        }
    return {std::move(first), std::move(second)};
}

TwoPhaseResult two_phase_factor(const HostGraph& g, const PatternGraph& h, std::uint64_t seed,
                                const TwoPhaseOptions& options)
{
    if (g.partitioned() || g.directed() || h.directed())
        throw FactorError("two-phase search takes an unpartitioned undirected host and pattern");
    if (density_report(h).balance_class != BalanceClass::non_vertex_balanced)
        throw FactorError("two-phase search needs a non-vertex-balanced pattern");
    const int q = factor_size(g, h);

    TwoPhaseResult result;
    result.trace = collapse_full(h);
    const auto& trace = result.trace;
    const int k = trace.terminal.vertex_count();
    auto [first, second] = phase_shares(g, seed, options);

    // Phase one: copies of H' in the first share.
    auto types = component_types(trace.h_prime, false);
    auto pool = component_pool(first, trace.h_prime, types, options.search.copy_limit);
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::vector<int> chosen;
    if (auto greedy = greedy_cover(pool, rng, options.greedy_restarts)) {
        chosen = std::move(*greedy);
    } else {
        auto cover = exact_cover(pool, options.search.node_budget);
        if (cover.status != SearchStatus::found) {
            result.status = cover.status;
            result.phase = "h_prime";
            return result;
        }
        chosen = std::move(cover.chosen);
    }
    auto inner = assemble_factor(pool, chosen, types, trace.h_prime);

    // Phase two: supernode (c, j) is cluster c of the j-th H'-copy.
    HostGraph quotient(k * q, GraphKind::multi);
    std::vector<std::vector<int>> classes(k);
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < q; ++j)
            classes[c].push_back(c * q + j);
    quotient.set_partition(classes);
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = c1 + 1; c2 < k; ++c2) {
            std::vector<std::pair<int, int>> slots;
            for (const auto& e : h.edges()) {
                int a = trace.cluster_map[e.u];
                int b = trace.cluster_map[e.v];
                for (int s = 0; s < e.multiplicity; ++s) {
                    if (a == c1 && b == c2)
                        slots.emplace_back(e.u, e.v);
                    else if (a == c2 && b == c1)
                        slots.emplace_back(e.v, e.u);
                }
            }
            if (slots.empty())
                continue;
            for (int j1 = 0; j1 < q; ++j1)
                for (int j2 = 0; j2 < q; ++j2) {
                    int present = 0;
                    for (auto [a, b] : slots)
                        present += second.adjacent(inner.copies[j1][a], inner.copies[j2][b]);
                    if (present > 0)
                        quotient.add_edge(c1 * q + j1, c2 * q + j2, present);
                }
        }

    auto outer = find_factor(quotient, trace.terminal, options.search);
    result.quotient = quotient;
    if (outer.status != SearchStatus::found) {
        result.status = outer.status;
        result.phase = "quotient";
        return result;
    }

    FactorAssignment stitched;
    for (const auto& copy : outer.factor->copies) {
        Embedding e(h.vertex_count());
        for (int a = 0; a < h.vertex_count(); ++a) {
            int c = trace.cluster_map[a];
            int j = copy[c] - c * q;
            e[a] = inner.copies[j][a];
        }
        stitched.copies.push_back(std::move(e));
    }
    if (auto problem = validate_factor(g, h, stitched, true)) {
        result.status = SearchStatus::absent;
        result.phase = "stitch";
        return result;
    }
    result.status = SearchStatus::found;
    result.factor = std::move(stitched);
    return result;
}

}  // namespace hfactor
