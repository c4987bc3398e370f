#include "hfactor/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hfactor {

namespace {

BigInt factorial(int k)
{
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

HostMask mask_of(const Embedding& e)
{
    HostMask m = 0;
    for (int v : e)
        m |= HostMask{1} << v;
    return m;
}

}  // namespace

std::vector<ComponentType> component_types(const PatternGraph& h, bool partitioned)
{
    std::vector<ComponentType> types;
    for (const auto& comp : connected_components(h)) {
        PatternGraph sub = induced_subgraph(h, comp);
        bool placed = false;
        if (!partitioned) {
            for (auto& t : types) {
                if (t.shape.vertex_count() != sub.vertex_count() ||
                    t.shape.total_multiplicity() != sub.total_multiplicity())
                    continue;
                std::vector<int> roles;
                for_each_isomorphism(t.shape, sub, [&](const std::vector<int>& m) {
                    for (int i : m)
                        roles.push_back(comp[i]);
                    return false;
                });
                if (!roles.empty()) {
                    t.members.push_back(std::move(roles));
                    placed = true;
                    break;
                }
            }
        }
        if (!placed)
            types.push_back({std::move(sub), {comp}});
    }
    return types;
}

int factor_size(const HostGraph& g, const PatternGraph& h)
{
    if (h.vertex_count() == 0)
        throw FactorError("pattern has no vertices");
    if (g.partitioned()) {
        role_classes(g, h);
        return g.class_size();
    }
    if (g.vertex_count() % h.vertex_count() != 0)
        throw FactorError("host size " + std::to_string(g.vertex_count()) + " is not divisible by v_H = " +
                          std::to_string(h.vertex_count()));
    return g.vertex_count() / h.vertex_count();
}

PiecePool component_pool(const HostGraph& g, const PatternGraph& h, const std::vector<ComponentType>& types,
                         std::size_t copy_limit)
{
    if (g.vertex_count() > kMaskVertexCap)
        throw FactorError("exact search is limited to " + std::to_string(kMaskVertexCap) + " host vertices");
    const int q = factor_size(g, h);
    PiecePool pool;
    pool.vertex_count = g.vertex_count();
    for (int t = 0; t < static_cast<int>(types.size()); ++t) {
        const auto& type = types[t];
        pool.quota.push_back(q * static_cast<int>(type.members.size()));
        EmbeddingQuery query;
        query.host = &g;
        query.pattern = &type.shape;
        if (g.partitioned())
            query.role_class = type.members.front();
        for_each_embedding(query, [&](const Embedding& e) {
            if (pool.pieces.size() >= copy_limit)
                throw CopyLimitError("component enumeration exceeded the limit of " + std::to_string(copy_limit));
            pool.pieces.push_back({mask_of(e), t, e});
            return true;
        });
    }
    return pool;
}

FactorAssignment assemble_factor(const PiecePool& pool, const std::vector<int>& chosen,
                                 const std::vector<ComponentType>& types, const PatternGraph& h)
{
    std::vector<std::vector<int>> by_type(types.size());
    for (int i : chosen)
        by_type[pool.pieces[i].type].push_back(i);
    std::size_t q = types.empty() ? 0 : by_type[0].size() / types[0].members.size();

    FactorAssignment a;
    a.copies.assign(q, Embedding(h.vertex_count(), -1));
    for (std::size_t t = 0; t < types.size(); ++t) {
        const auto& members = types[t].members;
        for (std::size_t idx = 0; idx < by_type[t].size(); ++idx) {
            const auto& image = pool.pieces[by_type[t][idx]].image;
            const auto& roles = members[idx % members.size()];
            auto& copy = a.copies[idx / members.size()];
            for (std::size_t i = 0; i < roles.size(); ++i)
                copy[roles[i]] = image[i];
        }
    }
    return a;
}

FactorResult find_factor(const HostGraph& g, const PatternGraph& h, const SearchOptions& options)
{
    auto types = component_types(h, g.partitioned());
    auto pool = component_pool(g, h, types, options.copy_limit);
    auto cover = exact_cover(pool, options.node_budget);
    FactorResult r;
    r.status = cover.status;
    r.nodes = cover.nodes;
    if (cover.status == SearchStatus::found)
        r.factor = assemble_factor(pool, cover.chosen, types, h);
    return r;
}

BigInt count_factors(const HostGraph& g, const PatternGraph& h, int vertex_cap, std::size_t copy_limit)
{
    if (g.vertex_count() > vertex_cap)
        throw FactorError("counting is capped at " + std::to_string(vertex_cap) + " host vertices");
    auto types = component_types(h, g.partitioned());
    auto pool = component_pool(g, h, types, copy_limit);
    BigInt covers = count_covers(pool);
    if (covers == 0)
        return 0;

    const int q = factor_size(g, h);
    BigInt groupings = 1;
    if (g.partitioned()) {
        for (std::size_t t = 1; t < types.size(); ++t)
            groupings *= factorial(q);
    } else {
        for (const auto& t : types) {
            int c = static_cast<int>(t.members.size());
            BigInt block = factorial(c);
            BigInt denom = 1;
            for (int i = 0; i < q; ++i)
                denom *= block;
            groupings *= factorial(q * c) / denom;
        }
        groupings /= factorial(q);
    }
    return covers * groupings;
}

std::optional<std::string> validate_factor(const HostGraph& g, const PatternGraph& h, const FactorAssignment& a,
                                           bool require_full)
{
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    std::vector<int> classes;
    try {
        classes = role_classes(g, h);
    } catch (const FactorError& e) {
        return std::string(e.what());
    }
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < a.copies.size(); ++c) {
        const auto& copy = a.copies[c];
        const std::string tag = "copy " + std::to_string(c) + ": ";
        if (static_cast<int>(copy.size()) != k)
            return tag + "wrong number of roles";
        for (int x = 0; x < k; ++x) {
            int v = copy[x];
            if (v < 0 || v >= n)
                return tag + "vertex out of range";
            if (seen[v])
                return tag + "vertex " + std::to_string(v) + " used twice";
            seen[v] = 1;
            if (!classes.empty() && g.class_of(v) != classes[x])
                return tag + "role " + h.role_name(x) + " outside its class";
        }
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) {
                if (x == y || (!h.directed() && y < x))
                    continue;
                if (h.multiplicity(x, y) > g.multiplicity(copy[x], copy[y]))
                    return tag + "edge " + h.role_name(x) + "-" + h.role_name(y) + " not realized";
            }
    }
    for (int v : a.uncovered) {
        if (v < 0 || v >= n)
            return std::string("uncovered vertex out of range");
        if (seen[v])
            return "vertex " + std::to_string(v) + " both covered and uncovered";
        seen[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            return "vertex " + std::to_string(v) + " unaccounted for";
    if (require_full && !a.uncovered.empty())
        return std::string("factor leaves vertices uncovered");
    return std::nullopt;
}

namespace {

class GreedyPacker {
public:
    GreedyPacker(const CopyIndex& index, int n, std::mt19937_64& rng)
        : index_(index), n_(n), rng_(rng), owner_(n, -1), chosen_(index.total(), 0)
    {
    }

    std::vector<int> run()
    {
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_);
        for (;;) {
            int best = -1;
            int best_count = 0;
            for (int v : order) {
                if (owner_[v] >= 0)
                    continue;
                int count = 0;
                for (int c : index_.through[v])
                    count += available(c);
                if (count > 0 && (best < 0 || count < best_count)) {
                    best = v;
                    best_count = count;
                }
            }
            if (best < 0)
                break;
            std::vector<int> options;
            for (int c : index_.through[best])
                if (available(c))
                    options.push_back(c);
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            take(options[pick(rng_)]);
        }
        while (improve())
            ;
        std::vector<int> out;
        for (std::size_t c = 0; c < chosen_.size(); ++c)
            if (chosen_[c])
                out.push_back(static_cast<int>(c));
        return out;
    }

private:
    static constexpr std::size_t kCandidateCap = 400;

    bool available(int c) const
    {
        for (int v : index_.copies[c])
            if (owner_[v] >= 0)
                return false;
        return true;
    }

    void take(int c)
    {
        chosen_[c] = 1;
        for (int v : index_.copies[c])
            owner_[v] = c;
    }

    void drop(int c)
    {
        chosen_[c] = 0;
        for (int v : index_.copies[c])
            owner_[v] = -1;
    }

    bool disjoint(int a, int b) const
    {
        for (int u : index_.copies[a])
            for (int v : index_.copies[b])
                if (u == v)
                    return false;
        return true;
    }

    /// One pass of remove-one, insert-two; true when anything changed.
    bool improve()
    {
        std::vector<int> current;
        for (std::size_t c = 0; c < chosen_.size(); ++c)
            if (chosen_[c])
                current.push_back(static_cast<int>(c));
        std::shuffle(current.begin(), current.end(), rng_);

        bool changed = false;
        for (int k : current) {
            if (!chosen_[k])
                continue;
            std::vector<int> candidates;
            for (int x : index_.copies[k])
                for (int c : index_.through[x]) {
                    if (c == k)
                        continue;
                    bool inside = true;
                    for (int v : index_.copies[c])
                        inside = inside && (owner_[v] < 0 || owner_[v] == k);
                    if (inside)
                        candidates.push_back(c);
                }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            if (candidates.size() > kCandidateCap) {
                std::shuffle(candidates.begin(), candidates.end(), rng_);
                candidates.resize(kCandidateCap);
            }
            bool swapped = false;
            for (std::size_t i = 0; i < candidates.size() && !swapped; ++i)
                for (std::size_t j = i + 1; j < candidates.size() && !swapped; ++j)
                    if (disjoint(candidates[i], candidates[j])) {
                        drop(k);
                        take(candidates[i]);
                        take(candidates[j]);
                        swapped = true;
                    }
            changed = changed || swapped;
        }
        return changed;
    }

    const CopyIndex& index_;
    int n_;
    std::mt19937_64& rng_;
    std::vector<int> owner_;
    std::vector<char> chosen_;
};

FactorAssignment from_copies(const CopyIndex& index, const std::vector<int>& chosen, int n)
{
    FactorAssignment a;
    std::vector<char> covered(n, 0);
    for (int c : chosen) {
        a.copies.push_back(index.copies[c]);
        for (int v : index.copies[c])
            covered[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            a.uncovered.push_back(v);
    return a;
}

}  // namespace

PartialResult partial_factor(const HostGraph& g, const PatternGraph& h, double eps, std::uint64_t seed,
                             const PartialOptions& options)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw FactorError("eps must lie strictly between 0 and 1");
    if (h.vertex_count() == 0)
        throw FactorError("pattern has no vertices");
    const int n = g.vertex_count();
    const auto allowed = static_cast<std::size_t>(std::floor(eps * n));
    auto index = enumerate_copies(g, h, std::nullopt, options.copy_limit);

    std::mt19937_64 rng(seed);
    PartialResult result;
    result.assignment.uncovered.resize(n);
    std::iota(result.assignment.uncovered.begin(), result.assignment.uncovered.end(), 0);
    for (int round = 0; round < std::max(1, options.restarts); ++round) {
        auto packed = from_copies(index, GreedyPacker(index, n, rng).run(), n);
        if (packed.uncovered.size() < result.assignment.uncovered.size())
            result.assignment = std::move(packed);
        if (result.assignment.uncovered.size() <= allowed)
            break;
    }

    if (result.assignment.uncovered.size() > allowed && n <= std::min(options.exact_cap, kMaskVertexCap)) {
        PiecePool pool;
        pool.vertex_count = n;
        pool.quota = {n / h.vertex_count(), static_cast<int>(allowed)};
        for (const auto& e : index.copies)
            pool.pieces.push_back({mask_of(e), 0, e});
        for (int v = 0; v < n; ++v)
            pool.pieces.push_back({HostMask{1} << v, 1, {v}});
        auto cover = exact_cover(pool, options.node_budget);
        if (cover.status == SearchStatus::found) {
            FactorAssignment a;
            for (int i : cover.chosen) {
                const auto& p = pool.pieces[i];
                if (p.type == 0)
                    a.copies.push_back(p.image);
                else
                    a.uncovered.push_back(p.image.front());
            }
            std::sort(a.uncovered.begin(), a.uncovered.end());
            result.assignment = std::move(a);
        } else if (cover.status == SearchStatus::budget) {
            result.budget_exhausted = true;
        }
    }
    result.target_met = result.assignment.uncovered.size() <= allowed;
    return result;
}

Th2Report check_th2(const HostGraph& g, const PatternGraph& h, std::size_t copy_limit)
{
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    auto index = enumerate_copies(g, h, std::nullopt, copy_limit);

    // Roles in one Aut(H) orbit are interchangeable within an unpartitioned copy.
    std::vector<int> orbit(k);
    std::iota(orbit.begin(), orbit.end(), 0);
    if (!g.partitioned())
        for (const auto& a : automorphisms(h))
            for (int x = 0; x < k; ++x)
                orbit[x] = std::min(orbit[x], a[x]);
    for (int pass = 0; pass < k; ++pass)
        for (int x = 0; x < k; ++x)
            orbit[x] = orbit[orbit[x]];

    std::vector<std::vector<char>> plays(k, std::vector<char>(n, 0));
    for (const auto& copy : index.copies)
        for (int x = 0; x < k; ++x)
            plays[orbit[x]][copy[x]] = 1;

    Th2Report r;
    r.cond1 = true;
    for (int v = 0; v < n; ++v)
        r.cond1 = r.cond1 && !index.through[v].empty();
    r.cond2 = true;
    for (int x = 0; x < k; ++x) {
        const auto& row = plays[orbit[x]];
        int count = static_cast<int>(std::count(row.begin(), row.end(), 1));
        r.role_counts.push_back(count);
        r.cond2 = r.cond2 && static_cast<long long>(count) * k >= n;
    }
    return r;
}

}  // namespace hfactor
