#include "hfactor/random_models.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace hfactor {

namespace {

// Stream tags keep the models' draws unrelated under a shared seed.
constexpr std::uint64_t kTagGnp = 0x676e70;
constexpr std::uint64_t kTagSlot = 0x736c6f74;
constexpr std::uint64_t kTagArc = 0x617263;
constexpr std::uint64_t kTagDirection = 0x646972;
constexpr std::uint64_t kTagSplit = 0x73706c;

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw SampleError("probability must lie in [0,1], got " + std::to_string(p));
}

void check_size(int n)
{
    if (n < 0)
        throw SampleError("size must be non-negative");
}

std::vector<int> gnp_row(int n, int u, double p, std::uint64_t seed)
{
    std::vector<int> row;
    for (int v = u + 1; v < n; ++v)
        if (counter_uniform(seed, kTagGnp, u, v) < p)
            row.push_back(v);
    return row;
}

}  // namespace

std::string_view to_string(Model m)
{
    switch (m) {
    case Model::gnp: return "gnp";
    case Model::partitioned: return "partitioned";
    case Model::digraph: return "digraph";
    }
    return "?";
}

Model parse_model(std::string_view text)
{
    if (text == "gnp")
        return Model::gnp;
    if (text == "partitioned")
        return Model::partitioned;
    if (text == "digraph")
        return Model::digraph;
    throw SampleError("unknown model '" + std::string(text) + "'");
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t tag, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c)
{
    std::uint64_t h = mix64(seed ^ mix64(tag));
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return mix64(mix64(master) ^ mix64(index + 0x5851f42d4c957f2dULL));
}

HostGraph sample_gnp(int n, double p, std::uint64_t seed)
{
    check_probability(p);
    check_size(n);
    HostGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v : gnp_row(n, u, p, seed))
            g.add_edge(u, v);
    return g;
}

HostGraph sample_gnp_parallel(int n, double p, std::uint64_t seed)
{
    check_probability(p);
    check_size(n);
    std::vector<std::vector<int>> rows(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (int u = 0; u < n; ++u)
        rows[u] = gnp_row(n, u, p, seed);

    HostGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v : rows[u])
            g.add_edge(u, v);
    return g;
}

HostGraph sample_partitioned(const PatternGraph& pattern, int r, double p, std::uint64_t seed)
{
    check_probability(p);
    if (pattern.directed())
        throw SampleError("partitioned model takes an undirected pattern; use the digraph model");
    if (r < 1)
        throw SampleError("class size must be positive");
    HostGraph full = blowup_pattern(pattern, r);
    HostGraph g(full.vertex_count(), full.kind());
    for (const auto& e : full.edges()) {
        int kept = 0;
        for (int slot = 0; slot < e.multiplicity; ++slot)
            if (counter_uniform(seed, kTagSlot, e.u, e.v, slot) < p)
                ++kept;
        if (kept > 0)
            g.add_edge(e.u, e.v, kept);
    }
    g.set_partition(full.parts());
    return g;
}

HostGraph sample_dnp(int n, double p, std::uint64_t seed)
{
    check_probability(p);
    check_size(n);
    HostGraph g(n, GraphKind::digraph);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (counter_uniform(seed, kTagArc, u, v) >= p)
                continue;
            if (counter_uniform(seed, kTagDirection, u, v) < 0.5)
                g.add_edge(u, v);
            else
                g.add_edge(v, u);
        }
    return g;
}

HostGraph sample(const SampleSpec& spec)
{
    switch (spec.model) {
    case Model::gnp: return sample_gnp(spec.size, spec.p, spec.seed);
    case Model::partitioned: return sample_partitioned(spec.pattern, spec.size, spec.p, spec.seed);
    case Model::digraph: return sample_dnp(spec.size, spec.p, spec.seed);
    }
    throw SampleError("unknown model");
}

HostGraph orient_restrict(const HostGraph& d, const PatternGraph& pattern,
                          const std::vector<std::vector<int>>& classes)
{
    if (!d.directed() || !pattern.directed())
        throw SampleError("orient_restrict needs a digraph host and a directed pattern");
    if (static_cast<int>(classes.size()) != pattern.vertex_count())
        throw SampleError("partition has " + std::to_string(classes.size()) + " classes but the pattern has " +
                          std::to_string(pattern.vertex_count()) + " roles");
    for (const auto& cls : classes)
        for (int v : cls)
            if (v < 0 || v >= d.vertex_count())
                throw SampleError("partition vertex out of range");

    HostGraph out(d.vertex_count(), GraphKind::digraph);
    out.set_partition(classes);
    for (const auto& arc : pattern.edges())
        for (int a : classes[arc.u])
            for (int b : classes[arc.v])
                if (d.adjacent(a, b))
                    out.add_edge(a, b);
    return out;
}

std::vector<HostGraph> split_edges(const HostGraph& g, int ways, std::uint64_t seed)
{
    if (ways < 2)
        throw SampleError("split_edges needs at least two ways");
    std::vector<HostGraph> shares(ways, HostGraph(g.vertex_count(), g.kind()));
    for (auto& s : shares)
        if (g.partitioned())
            s.set_partition(g.parts());
    for (const auto& e : g.edges())
        for (int slot = 0; slot < e.multiplicity; ++slot) {
            double u = counter_uniform(seed, kTagSplit, e.u, e.v, slot);
            int which = std::min(ways - 1, static_cast<int>(u * ways));
            shares[which].add_edge(e.u, e.v);
        }
    return shares;
}

}  // namespace hfactor
