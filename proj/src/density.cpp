#include "hfactor/density.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace hfactor {

std::string to_string(const Rational& q)
{
    return q.str();
}

std::vector<int> mask_vertices(VertexMask mask)
{
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u)
            out.push_back(v);
    return out;
}

VertexMask vertices_mask(const std::vector<int>& vertices)
{
    VertexMask m = 0;
    for (int v : vertices)
        m |= VertexMask{1} << v;
    return m;
}

std::string_view to_string(BalanceClass c)
{
    switch (c) {
    case BalanceClass::strictly_balanced: return "strictly_balanced";
    case BalanceClass::vertex_balanced_not_strict: return "vertex_balanced_not_strict";
    case BalanceClass::non_vertex_balanced: return "non_vertex_balanced";
    }
    return "?";
}

std::string_view to_string(ThresholdStatus s)
{
    switch (s) {
    case ThresholdStatus::proved_non_vertex_balanced: return "proved_non_vertex_balanced";
    case ThresholdStatus::proved_strictly_balanced: return "proved_strictly_balanced";
    case ThresholdStatus::conjecture_only: return "conjecture_only";
    }
    return "?";
}

Rational density_d(const PatternGraph& h)
{
    if (h.vertex_count() < 2)
        throw DensityError("density needs at least two vertices");
    return Rational(h.total_multiplicity(), h.vertex_count() - 1);
}

std::vector<int> induced_edge_counts(const PatternGraph& h)
{
    const int n = h.vertex_count();
    if (n < 2)
        throw DensityError("density needs at least two vertices");
    if (n > kDensityVertexCap)
        throw DensityError("subset enumeration limited to " + std::to_string(kDensityVertexCap) + " vertices");
    const VertexMask full = (VertexMask{1} << n) - 1;
    std::vector<int> edges(static_cast<std::size_t>(full) + 1, 0);
    for (VertexMask mask = 1; mask <= full; ++mask) {
        int low = std::countr_zero(mask);
        VertexMask rest = mask & (mask - 1);
        int e = edges[rest];
        for (VertexMask r = rest; r != 0; r &= r - 1) {
            int w = std::countr_zero(r);
            e += h.multiplicity(low, w);
            if (h.directed())
                e += h.multiplicity(w, low);
        }
        edges[mask] = e;
    }
    return edges;
}

namespace {

/// Exact comparison of e1/(v1-1) against e2/(v2-1).
int compare_density(int e1, int v1, int e2, int v2)
{
    long long lhs = static_cast<long long>(e1) * (v2 - 1);
    long long rhs = static_cast<long long>(e2) * (v1 - 1);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct Best {
    VertexMask mask = 0;
    int edges = 0;
    int size = 0;

    /// Tie rule: density, then edge count; masks arrive in increasing order so the first wins.
    void offer(VertexMask m, int e, int k)
    {
        if (mask == 0) {
            *this = {m, e, k};
            return;
        }
        int c = compare_density(e, k, edges, size);
        if (c > 0 || (c == 0 && e > edges))
            *this = {m, e, k};
    }

    DenseSubset result() const { return {Rational(edges, size - 1), mask, edges}; }
};

}  // namespace

DenseSubset max_density(const PatternGraph& h)
{
    auto edges = induced_edge_counts(h);
    Best best;
    for (VertexMask mask = 1; mask < edges.size(); ++mask) {
        int k = std::popcount(mask);
        if (k >= 2)
            best.offer(mask, edges[mask], k);
    }
    return best.result();
}

DensityReport density_report(const PatternGraph& h)
{
    auto edges = induced_edge_counts(h);
    const int n = h.vertex_count();
    const VertexMask full = (VertexMask{1} << n) - 1;

    Best overall;
    std::vector<Best> local(n);
    for (VertexMask mask = 1; mask <= full; ++mask) {
        int k = std::popcount(mask);
        if (k < 2)
            continue;
        overall.offer(mask, edges[mask], k);
        for (VertexMask r = mask; r != 0; r &= r - 1)
            local[std::countr_zero(r)].offer(mask, edges[mask], k);
    }

    DensityReport rep;
    rep.d = density_d(h);
    rep.m = overall.result().density;
    rep.m_witness = overall.mask;
    rep.balanced = rep.d == rep.m;
    for (const auto& b : local)
        rep.per_vertex_m.push_back(b.result());

    bool vertex_balanced = true;
    for (const auto& b : local)
        if (compare_density(b.edges, b.size, overall.edges, overall.size) < 0)
            vertex_balanced = false;

    bool strict = rep.balanced;
    for (VertexMask mask = 1; strict && mask < full; ++mask) {
        int k = std::popcount(mask);
        if (k >= 2 && compare_density(edges[mask], k, edges[full], n) >= 0)
            strict = false;
    }

    if (!vertex_balanced)
        rep.balance_class = BalanceClass::non_vertex_balanced;
    else if (strict)
        rep.balance_class = BalanceClass::strictly_balanced;
    else
        rep.balance_class = BalanceClass::vertex_balanced_not_strict;

    rep.s_per_vertex.assign(n, std::nullopt);
    if (vertex_balanced) {
        for (VertexMask mask = 1; mask <= full; ++mask) {
            int k = std::popcount(mask);
            if (k < 2)
                continue;
            for (VertexMask r = mask; r != 0; r &= r - 1) {
                int v = std::countr_zero(r);
                if (compare_density(edges[mask], k, local[v].edges, local[v].size) != 0)
                    continue;
                auto& sv = rep.s_per_vertex[v];
                if (!sv || edges[mask] < *sv)
                    sv = edges[mask];
            }
        }
        int s = 0;
        for (const auto& sv : rep.s_per_vertex)
            s = std::max(s, sv.value_or(0));
        rep.s = s;
    }
    return rep;
}

ThresholdDescriptor threshold_descriptor(const DensityReport& report, const PatternGraph& h)
{
    if (report.m == 0)
        throw DensityError("threshold undefined for an edgeless pattern");
    ThresholdDescriptor t;
    switch (report.balance_class) {
    case BalanceClass::non_vertex_balanced:
        t.density_exponent = Rational(-1) / report.m;
        t.log_exponent = 0;
        t.status = ThresholdStatus::proved_non_vertex_balanced;
        break;
    case BalanceClass::strictly_balanced:
        t.density_exponent = Rational(-1) / report.d;
        t.log_exponent = Rational(1, h.total_multiplicity());
        t.status = ThresholdStatus::proved_strictly_balanced;
        break;
    case BalanceClass::vertex_balanced_not_strict:
        t.density_exponent = Rational(-1) / report.m;
        t.log_exponent = Rational(1, *report.s);
        t.status = ThresholdStatus::conjecture_only;
        break;
    }
    return t;
}

ThresholdDescriptor threshold_descriptor(const PatternGraph& h)
{
    return threshold_descriptor(density_report(h), h);
}

double ThresholdDescriptor::evaluate(double n) const
{
    double a = static_cast<double>(density_exponent);
    double b = static_cast<double>(log_exponent);
    return std::pow(n, a) * std::pow(std::log(n), b);
}

std::string report_digest(const DensityReport& r)
{
    std::ostringstream out;
    out << "d=" << to_string(r.d) << ";m=" << to_string(r.m) << ";class=" << to_string(r.balance_class)
        << ";balanced=" << (r.balanced ? 1 : 0) << ";s=";
    if (r.s)
        out << *r.s;
    else
        out << '-';
    return out.str();
}

}  // namespace hfactor
