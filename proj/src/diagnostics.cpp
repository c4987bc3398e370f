#include "hfactor/diagnostics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hfactor {

namespace {

void check_host(const HostGraph& g, const PatternGraph& h, int vertex_cap)
{
    if (!g.partitioned())
        throw DiagnosticsError("diagnostics need a partitioned host");
    role_classes(g, h);
    if (g.vertex_count() > vertex_cap)
        throw DiagnosticsError("host exceeds the counting cap of " + std::to_string(vertex_cap) + " vertices");
}

/// Class of each vertex of z; throws unless the classes are distinct.
std::vector<int> classes_of(const HostGraph& g, const std::vector<int>& z)
{
    std::vector<int> cls;
    std::vector<char> hit(g.class_count(), 0);
    for (int v : z) {
        if (v < 0 || v >= g.vertex_count())
            throw DiagnosticsError("vertex out of range");
        int c = g.class_of(v);
        if (hit[c])
            throw DiagnosticsError("set has two vertices in class " + std::to_string(c));
        hit[c] = 1;
        cls.push_back(c);
    }
    return cls;
}

std::vector<std::vector<int>> all_transversals(const HostGraph& g)
{
    std::vector<std::vector<int>> out;
    const int k = g.class_count();
    const int r = g.class_size();
    if (r == 0)
        return out;
    std::vector<int> digits(k, 0);
    for (;;) {
        std::vector<int> z(k);
        for (int i = 0; i < k; ++i)
            z[i] = g.part(i)[digits[i]];
        out.push_back(std::move(z));
        int i = k - 1;
        while (i >= 0 && ++digits[i] == r)
            digits[i--] = 0;
        if (i < 0)
            break;
    }
    return out;
}

/// Position of a transversal in the lexicographic order of all_transversals.
std::size_t transversal_index(const HostGraph& g, const std::vector<int>& z_by_class)
{
    std::size_t idx = 0;
    for (int i = 0; i < g.class_count(); ++i) {
        const auto& part = g.part(i);
        auto pos = std::lower_bound(part.begin(), part.end(), z_by_class[i]) - part.begin();
        idx = idx * g.class_size() + static_cast<std::size_t>(pos);
    }
    return idx;
}

BigInt phi_without(const HostGraph& g, const PatternGraph& h, const std::vector<int>& z)
{
    return count_factors(remove_vertices(g, z), h, std::numeric_limits<int>::max());
}

PropertyReport build_report(const HostGraph& g, const PatternGraph& h, double p, int vertex_cap, bool parallel)
{
    check_host(g, h, vertex_cap);
    if (!(p > 0.0 && p <= 1.0))
        throw DiagnosticsError("p must lie in (0,1]");
    const int k = h.vertex_count();
    const int r = g.class_size();
    const int n = g.vertex_count();
    const int e = h.total_multiplicity();

    PropertyReport rep;
    rep.phi = count_factors(g, h, vertex_cap);
    rep.log_phi = log_big(rep.phi);
    if (n >= 2)
        rep.A_reference = (static_cast<double>(k - 1) / k) * n * std::log(n) +
                          (static_cast<double>(e) * n / k) * std::log(p);
    rep.D_p = std::pow(static_cast<double>(r), k - 1) * std::pow(p, e);

    auto index = enumerate_copies(g, h);
    for (int x = 0; x < n; ++x) {
        rep.copies_through.push_back(index.count_through(x));
        double dev = std::abs(static_cast<double>(index.count_through(x)) - rep.D_p) / rep.D_p;
        rep.D_deviation_max = std::max(rep.D_deviation_max, dev);
    }

    auto table = parallel ? weight_table_parallel(g, h, vertex_cap) : weight_table(g, h, vertex_cap);
    BigInt max_w = 0;
    for (const auto& copy : index.copies) {
        const BigInt& w = table[transversal_index(g, copy)].w;
        rep.weight_sum += w;
        max_w = std::max(max_w, w);
    }
    if (rep.phi > 0 && rep.weight_sum > 0)
        rep.maxr_w = std::exp(log_big(max_w) + std::log(static_cast<double>(index.total())) - log_big(rep.weight_sum));

    BigInt scale = 1;
    for (int i = 0; i < 2 * (k - 1); ++i)
        scale *= n;
    for (int missing = 0; missing < k && r > 0; ++missing) {
        std::vector<int> digits(k, 0);
        for (;;) {
            std::vector<int> z(k);
            for (int i = 0; i < k; ++i)
                z[i] = g.part(i)[digits[i]];
            std::vector<BigInt> values;
            for (int v : g.part(missing)) {
                z[missing] = v;
                values.push_back(table[transversal_index(g, z)].w);
            }
            BigInt top = *std::max_element(values.begin(), values.end());
            BigInt med = lower_median(values);
            if (top * scale > rep.phi && top > 2 * med) {
                std::vector<int> y;
                for (int i = 0; i < k; ++i)
                    if (i != missing)
                        y.push_back(g.part(i)[digits[i]]);
                rep.C_violations.push_back({std::move(y), missing, top, med});
            }
            int i = k - 1;
            for (; i >= 0; --i) {
                if (i == missing)
                    continue;
                if (++digits[i] < r)
                    break;
                digits[i] = 0;
            }
            if (i < 0)
                break;
        }
    }
    return rep;
}

}  // namespace

HostGraph remove_vertices(const HostGraph& g, const std::vector<int>& removed)
{
    const int n = g.vertex_count();
    std::vector<int> map(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw DiagnosticsError("vertex out of range");
        map[v] = -1;
    }
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (map[v] == 0)
            map[v] = next++;
        else
            map[v] = -1;

    HostGraph out(next, g.kind());
    for (const auto& e : g.edges())
        if (map[e.u] >= 0 && map[e.v] >= 0)
            out.add_edge(map[e.u], map[e.v], e.multiplicity);
    if (g.partitioned()) {
        std::vector<std::vector<int>> classes;
        for (const auto& part : g.parts()) {
            std::vector<int> c;
            for (int v : part)
                if (map[v] >= 0)
                    c.push_back(map[v]);
            classes.push_back(std::move(c));
        }
        out.set_partition(std::move(classes));
    }
    return out;
}

BigInt weight_w(const HostGraph& g, const PatternGraph& h, const std::vector<int>& z, int vertex_cap)
{
    check_host(g, h, vertex_cap);
    const int k = h.vertex_count();
    auto cls = classes_of(g, z);
    if (static_cast<int>(z.size()) == k)
        return phi_without(g, h, z);
    if (static_cast<int>(z.size()) != k - 1)
        throw DiagnosticsError("w needs one vertex per class, or one per class but one");
    std::vector<char> hit(k, 0);
    for (int c : cls)
        hit[c] = 1;
    int missing = static_cast<int>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
    BigInt total = 0;
    auto full = z;
    full.push_back(-1);
    for (int v : g.part(missing)) {
        full.back() = v;
        total += phi_without(g, h, full);
    }
    return total;
}

std::vector<WeightEntry> weight_table(const HostGraph& g, const PatternGraph& h, int vertex_cap)
{
    check_host(g, h, vertex_cap);
    std::vector<WeightEntry> table;
    for (auto& z : all_transversals(g)) {
        BigInt w = phi_without(g, h, z);
        table.push_back({std::move(z), std::move(w)});
    }
    return table;
}

std::vector<WeightEntry> weight_table_parallel(const HostGraph& g, const PatternGraph& h, int vertex_cap)
{
    check_host(g, h, vertex_cap);
    auto zs = all_transversals(g);
    std::vector<WeightEntry> table(zs.size());
    const auto count = static_cast<long long>(zs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        table[i].z = zs[i];
        table[i].w = phi_without(g, h, zs[i]);
    }
    return table;
}

double log_big(const BigInt& x)
{
    if (x <= 0)
        return -std::numeric_limits<double>::infinity();
    if (boost::multiprecision::msb(x) < 900)
        return std::log(static_cast<double>(x));
    return static_cast<double>(log(boost::multiprecision::cpp_bin_float_50(x)));
}

BigInt lower_median(std::vector<BigInt> values)
{
    if (values.empty())
        throw DiagnosticsError("median of an empty set");
    auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

double factor_entropy(const HostGraph& g, const PatternGraph& h, int y, int vertex_cap)
{
    check_host(g, h, vertex_cap);
    if (y < 0 || y >= g.vertex_count())
        throw DiagnosticsError("vertex out of range");
    BigInt phi = count_factors(g, h, vertex_cap);
    if (phi == 0)
        throw DiagnosticsError("entropy undefined: the host has no factor");
    const double log_phi = log_big(phi);
    double entropy = 0.0;
    for (const auto& copy : enumerate_copies(g, h, y).copies) {
        BigInt w = phi_without(g, h, copy);
        if (w == 0)
            continue;
        double log_w = log_big(w);
        entropy += std::exp(log_w - log_phi) * (log_phi - log_w);
    }
    return entropy;
}

ShearerCheck shearer_check(const HostGraph& g, const PatternGraph& h, int class_index, int vertex_cap)
{
    check_host(g, h, vertex_cap);
    if (class_index < 0 || class_index >= g.class_count())
        throw DiagnosticsError("class index out of range");
    BigInt phi = count_factors(g, h, vertex_cap);
    if (phi == 0)
        throw DiagnosticsError("Shearer check undefined: the host has no factor");
    ShearerCheck s;
    s.lhs = log_big(phi);
    for (int y : g.part(class_index))
        s.rhs += factor_entropy(g, h, y, vertex_cap);
    s.holds = s.lhs <= s.rhs + kShearerSlack;
    return s;
}

PropertyReport property_report(const HostGraph& g, const PatternGraph& h, double p, int vertex_cap)
{
    return build_report(g, h, p, vertex_cap, false);
}

PropertyReport property_report_parallel(const HostGraph& g, const PatternGraph& h, double p, int vertex_cap)
{
    return build_report(g, h, p, vertex_cap, true);
}

}  // namespace hfactor
