#include "hfactor/collapse.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace hfactor {

namespace {

ContractResult contract(const PatternGraph& g, std::span<const int> witness)
{
    const int n = g.vertex_count();
    std::vector<char> inside(n, 0);
    for (int v : witness)
        inside[v] = 1;

    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!inside[v])
            map[v] = next++;
    const int merged = next;
    for (int v : witness)
        map[v] = merged;

    PatternGraph out(merged + 1, g.directed() ? GraphKind::digraph : GraphKind::multi);
    for (int v = 0; v < n; ++v)
        if (!inside[v])
            out.set_role_name(map[v], g.role_name(v));
    std::string name = "[";
    for (std::size_t i = 0; i < witness.size(); ++i)
        name += (i ? "+" : "") + g.role_name(witness[i]);
    out.set_role_name(merged, name + "]");

    for (const auto& e : g.edges()) {
        if (inside[e.u] && inside[e.v])
            continue;
        out.add_edge(map[e.u], map[e.v], e.multiplicity);
    }
    return {std::move(out), std::move(map)};
}

bool equals_density(int edges, int size, const Rational& m)
{
    return Rational(edges, size - 1) == m;
}

}  // namespace

ContractResult collapse_step(const PatternGraph& g, std::span<const int> witness)
{
    if (witness.size() < 2)
        throw CollapseError("collapse witness needs at least two vertices");
    std::vector<int> w(witness.begin(), witness.end());
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw CollapseError("collapse witness repeats a vertex");
    for (int v : w)
        if (v < 0 || v >= g.vertex_count())
            throw CollapseError("collapse witness vertex out of range");

    auto sub = induced_subgraph(g, w);
    if (density_d(sub) != max_density(g).density)
        throw CollapseError("collapse witness is not a maximum-density subgraph");
    return contract(g, w);
}

std::vector<std::vector<int>> CollapseTrace::clusters() const
{
    std::vector<std::vector<int>> out(terminal.vertex_count());
    for (std::size_t v = 0; v < cluster_map.size(); ++v)
        out[cluster_map[v]].push_back(static_cast<int>(v));
    return out;
}

CollapseTrace collapse_full(const PatternGraph& h, const CollapseOptions& options)
{
    if (h.directed())
        throw CollapseError("collapsing is defined for undirected patterns");

    CollapseTrace trace;
    trace.m = max_density(h).density;

    std::mt19937_64 rng(options.random_seed.value_or(0));
    PatternGraph current = h.with_kind(GraphKind::multi);
    std::vector<int> cluster_of(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        cluster_of[v] = v;

    while (current.vertex_count() >= 2) {
        auto edges = induced_edge_counts(current);
        const VertexMask full = (VertexMask{1} << current.vertex_count()) - 1;

        std::vector<VertexMask> candidates;
        VertexMask chosen = 0;
        int chosen_edges = -1;
        for (VertexMask mask = 1; mask < full; ++mask) {
            int k = std::popcount(mask);
            if (k < 2)
                continue;
            Rational d(edges[mask], k - 1);
            if (d > trace.m)
                throw CollapseError("collapse produced a subgraph denser than m(H)");
            if (d != trace.m)
                continue;
            candidates.push_back(mask);
            if (edges[mask] > chosen_edges) {
                chosen = mask;
                chosen_edges = edges[mask];
            }
        }
        if (candidates.empty()) {
            trace.degenerate = equals_density(edges[full], current.vertex_count(), trace.m);
            break;
        }
        if (options.random_seed) {
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            chosen = candidates[pick(rng)];
        }

        auto witness = mask_vertices(chosen);
        // Contraction never raises the maximum density, so m(H) stays the bar.
        if (!equals_density(edges[chosen], static_cast<int>(witness.size()), trace.m))
            throw CollapseError("illegal collapse witness");
        auto result = contract(current, witness);
        for (int& c : cluster_of)
            c = result.vertex_map[c];
        trace.steps.push_back({witness, result.graph});
        current = std::move(result.graph);
    }

    trace.cluster_map = cluster_of;
    trace.terminal = std::move(current);

    // Name terminal vertices by their original members.
    auto members = trace.clusters();
    for (std::size_t c = 0; c < members.size(); ++c) {
        if (members[c].size() == 1) {
            trace.terminal.set_role_name(static_cast<int>(c), h.role_name(members[c].front()));
            continue;
        }
        std::string name = "[";
        for (std::size_t i = 0; i < members[c].size(); ++i)
            name += (i ? "+" : "") + h.role_name(members[c][i]);
        trace.terminal.set_role_name(static_cast<int>(c), name + "]");
    }

    trace.h_prime = PatternGraph(h.vertex_count(), h.kind());
    for (int v = 0; v < h.vertex_count(); ++v)
        trace.h_prime.set_role_name(v, h.role_name(v));
    for (const auto& e : h.edges())
        if (cluster_of[e.u] == cluster_of[e.v])
            trace.h_prime.add_edge(e.u, e.v, e.multiplicity);
    return trace;
}

}  // namespace hfactor
