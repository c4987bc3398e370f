#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's algorithms; graphs are read only through multiplicity().

#include "hfactor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using hfactor::HostGraph;
using hfactor::PatternGraph;

/// Exact fraction num/den with den > 0, compared by cross-multiplication.
struct Frac {
    long long num = 0;
    long long den = 1;
    bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
    bool operator==(const Frac& o) const { return num * o.den == o.num * den; }
};

inline int edges_within(const PatternGraph& h, const std::vector<int>& vs)
{
    int e = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            e += h.multiplicity(vs[i], vs[j]);
    return e;
}

/// Every vertex subset with at least two members.
inline std::vector<std::vector<int>> subsets(int n)
{
    std::vector<std::vector<int>> out;
    for (long m = 0; m < (1L << n); ++m) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1)
                vs.push_back(v);
        if (vs.size() >= 2)
            out.push_back(vs);
    }
    return out;
}

struct Densities {
    Frac d;
    Frac m;
    std::vector<Frac> local;
    bool vertex_balanced = false;
    bool strictly_balanced = false;
    std::optional<int> s;
};

inline Densities densities(const PatternGraph& h)
{
    const int n = h.vertex_count();
    Densities r;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    r.d = {edges_within(h, all), n - 1};
    r.local.assign(n, Frac{-1, 1});
    r.m = {-1, 1};
    auto subs = subsets(n);
    for (const auto& vs : subs) {
        Frac f{edges_within(h, vs), static_cast<long long>(vs.size()) - 1};
        if (r.m < f)
            r.m = f;
        for (int v : vs)
            if (r.local[v] < f)
                r.local[v] = f;
    }
    r.vertex_balanced = std::all_of(r.local.begin(), r.local.end(), [&](const Frac& f) { return f == r.m; });
    r.strictly_balanced = r.d == r.m;
    for (const auto& vs : subs)
        if (static_cast<int>(vs.size()) < n && !(Frac{edges_within(h, vs), static_cast<long long>(vs.size()) - 1} < r.d))
            r.strictly_balanced = false;
    if (r.vertex_balanced) {
        int s = 0;
        for (int v = 0; v < n; ++v) {
            int best = 1 << 30;
            for (const auto& vs : subs) {
                if (std::find(vs.begin(), vs.end(), v) == vs.end())
                    continue;
                int e = edges_within(h, vs);
                if (Frac{e, static_cast<long long>(vs.size()) - 1} == r.m)
                    best = std::min(best, e);
            }
            s = std::max(s, best);
        }
        r.s = s;
    }
    return r;
}

/// Does the bijection roles -> block (block[perm[i]] plays role i) realize every pattern edge?
inline bool realizes(const HostGraph& g, const PatternGraph& h, const std::vector<int>& image)
{
    const int k = h.vertex_count();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && h.multiplicity(a, b) > g.multiplicity(image[a], image[b]))
                return false;
    return true;
}

/// |Aut(H)| by trying every permutation.
inline long long automorphism_count(const PatternGraph& h)
{
    const int k = h.vertex_count();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k && ok; ++b)
                ok = h.multiplicity(a, b) == h.multiplicity(perm[a], perm[b]);
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Number of distinct H-copies spanning exactly `block` (role-respecting when partitioned).
inline long long copies_on_block(const HostGraph& g, const PatternGraph& h, std::vector<int> block,
                                 long long aut_count)
{
    const int k = h.vertex_count();
    if (g.partitioned()) {
        std::vector<int> image(k, -1);
        for (int v : block) {
            int c = g.class_of(v);
            if (image[c] != -1)
                return 0;
            image[c] = v;
        }
        return realizes(g, h, image) ? 1 : 0;
    }
    std::sort(block.begin(), block.end());
    long long embeddings = 0;
    do {
        embeddings += realizes(g, h, block);
    } while (std::next_permutation(block.begin(), block.end()));
    return embeddings / aut_count;
}

/// Sum over all partitions of V(G) into v_H-blocks of the product of per-block copy counts.
inline long long set_partition_phi(const HostGraph& g, const PatternGraph& h)
{
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    if (n % k != 0)
        return 0;
    const long long aut = g.partitioned() ? 1 : automorphism_count(h);
    std::vector<char> used(n, 0);
    std::function<long long()> rec = [&]() -> long long {
        int first = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v]) {
                first = v;
                break;
            }
        if (first < 0)
            return 1;
        used[first] = 1;
        long long total = 0;
        std::vector<int> block{first};
        std::function<void(int)> choose = [&](int from) {
            if (static_cast<int>(block.size()) == k) {
                long long here = copies_on_block(g, h, block, aut);
                if (here > 0)
                    total += here * rec();
                return;
            }
            for (int v = from; v < n; ++v) {
                if (used[v])
                    continue;
                used[v] = 1;
                block.push_back(v);
                choose(v + 1);
                block.pop_back();
                used[v] = 0;
            }
        };
        choose(first + 1);
        used[first] = 0;
        return total;
    };
    return rec();
}

/// Distinct copies of H in G, each as (vertex set, realized edge set).
inline std::size_t brute_copy_count(const HostGraph& g, const PatternGraph& h, std::optional<int> anchor = {})
{
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> seen;
    std::vector<int> image(k);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == k) {
            if (!realizes(g, h, image))
                return;
            if (g.partitioned())
                for (int x = 0; x < k; ++x)
                    if (g.class_of(image[x]) != x)
                        return;
            if (anchor && std::find(image.begin(), image.end(), *anchor) == image.end())
                return;
            std::vector<int> vs = image;
            std::sort(vs.begin(), vs.end());
            std::vector<std::pair<int, int>> es;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int t = 0; t < h.multiplicity(a, b); ++t)
                        es.emplace_back(std::min(image[a], image[b]), std::max(image[a], image[b]));
            std::sort(es.begin(), es.end());
            if (g.partitioned())
                seen.insert({image, es});
            else
                seen.insert({vs, es});
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            image[depth] = v;
            rec(depth + 1);
            used[v] = 0;
        }
    };
    rec(0);
    return seen.size();
}

/// Brute-force perfect matching test on a graph given as an adjacency matrix.
inline bool has_perfect_matching(const std::vector<std::vector<char>>& adj, std::vector<char>& used)
{
    const int n = static_cast<int>(adj.size());
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (!used[i]) {
            v = i;
            break;
        }
    if (v < 0)
        return true;
    used[v] = 1;
    for (int w = v + 1; w < n; ++w) {
        if (used[w] || !adj[v][w])
            continue;
        used[w] = 1;
        bool ok = has_perfect_matching(adj, used);
        used[w] = 0;
        if (ok) {
            used[v] = 0;
            return true;
        }
    }
    used[v] = 0;
    return false;
}

/// Edge-count histogram of the graphs on n labelled vertices that have a perfect matching.
inline std::vector<long long> matching_edge_histogram(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());
    std::vector<long long> hist(m + 1, 0);
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        int edges = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                adj[pairs[i].first][pairs[i].second] = adj[pairs[i].second][pairs[i].first] = 1;
                ++edges;
            }
        std::vector<char> used(n, 0);
        if (has_perfect_matching(adj, used))
            ++hist[edges];
    }
    return hist;
}

/// Pr(G(n,p) has a perfect matching) from the exhaustive histogram.
inline double matching_probability(const std::vector<long long>& hist, double p)
{
    const int m = static_cast<int>(hist.size()) - 1;
    double total = 0.0;
    for (int e = 0; e <= m; ++e)
        total += static_cast<double>(hist[e]) * std::pow(p, e) * std::pow(1.0 - p, m - e);
    return total;
}

/// The p where matching_probability crosses 1/2, by bisection on the exact polynomial.
inline double matching_half_point(const std::vector<long long>& hist)
{
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        double mid = (lo + hi) / 2;
        (matching_probability(hist, mid) < 0.5 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace oracle
