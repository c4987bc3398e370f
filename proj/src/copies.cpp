#include "hfactor/copies.hpp"

#include <string>

namespace hfactor {

namespace {

/// Roles ordered so each role after the first in a component has an earlier neighbour.
std::vector<int> role_order(const PatternGraph& h, std::optional<int> first)
{
    const int k = h.vertex_count();
    std::vector<char> placed(k, 0);
    std::vector<int> links(k, 0);
    std::vector<int> order;
    auto place = [&](int x) {
        placed[x] = 1;
        order.push_back(x);
        for (int y = 0; y < k; ++y)
            if (y != x && (h.adjacent(x, y) || h.adjacent(y, x)))
                ++links[y];
    };
    if (first)
        place(*first);
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        for (int x = 0; x < k; ++x) {
            if (placed[x])
                continue;
            if (best < 0 || links[x] > links[best] || (links[x] == links[best] && h.degree(x) > h.degree(best)))
                best = x;
        }
        place(best);
    }
    return order;
}

class Embedder {
public:
    Embedder(const EmbeddingQuery& q, const std::function<bool(const Embedding&)>& visit)
        : g_(*q.host), h_(*q.pattern), role_class_(q.role_class), visit_(visit),
          image_(h_.vertex_count(), -1), used_(g_.vertex_count(), 0)
    {
        if (q.dedupe_automorphisms && role_class_.empty()) {
            for (auto& a : automorphisms(h_)) {
                bool identity = true;
                for (int i = 0; i < static_cast<int>(a.size()); ++i)
                    identity = identity && a[i] == i;
                if (!identity)
                    autos_.push_back(std::move(a));
            }
        }
    }

    void run(std::optional<int> anchor)
    {
        if (h_.vertex_count() == 0)
            return;
        if (!anchor) {
            order_ = role_order(h_, std::nullopt);
            extend(0);
            return;
        }
        for (int x = 0; x < h_.vertex_count() && !stopped_; ++x) {
            if (!allowed(x, *anchor))
                continue;
            order_ = role_order(h_, x);
            image_[x] = *anchor;
            used_[*anchor] = 1;
            extend(1);
            used_[*anchor] = 0;
            image_[x] = -1;
        }
    }

private:
    bool allowed(int role, int v) const
    {
        return role_class_.empty() || g_.class_of(v) == role_class_[role];
    }

    bool consistent(int depth, int role, int v) const
    {
        if (used_[v] || !allowed(role, v))
            return false;
        for (int i = 0; i < depth; ++i) {
            int y = order_[i];
            int w = image_[y];
            if (h_.multiplicity(role, y) > g_.multiplicity(v, w))
                return false;
            if (h_.directed() && h_.multiplicity(y, role) > g_.multiplicity(w, v))
                return false;
        }
        return true;
    }

    bool orbit_minimal() const
    {
        const int k = h_.vertex_count();
        for (const auto& a : autos_) {
            for (int i = 0; i < k; ++i) {
                int moved = image_[a[i]];
                if (moved < image_[i])
                    return false;
                if (moved > image_[i])
                    break;
            }
        }
        return true;
    }

    void try_vertex(int depth, int role, int v)
    {
        if (!consistent(depth, role, v))
            return;
        image_[role] = v;
        used_[v] = 1;
        extend(depth + 1);
        used_[v] = 0;
        image_[role] = -1;
    }

    void extend(int depth)
    {
        if (stopped_)
            return;
        const int k = h_.vertex_count();
        if (depth == k) {
            if (orbit_minimal() && !visit_(image_))
                stopped_ = true;
            return;
        }
        int role = order_[depth];
        for (int i = 0; i < depth; ++i) {
            int y = order_[i];
            if (h_.adjacent(y, role)) {
                for (int v : g_.neighbors(image_[y]))
                    if (!stopped_)
                        try_vertex(depth, role, v);
                return;
            }
            if (h_.adjacent(role, y)) {
                for (int v : g_.in_neighbors(image_[y]))
                    if (!stopped_)
                        try_vertex(depth, role, v);
                return;
            }
        }
        if (!role_class_.empty()) {
            for (int v : g_.part(role_class_[role]))
                if (!stopped_)
                    try_vertex(depth, role, v);
            return;
        }
        for (int v = 0; v < g_.vertex_count() && !stopped_; ++v)
            try_vertex(depth, role, v);
    }

    const HostGraph& g_;
    const PatternGraph& h_;
    std::vector<int> role_class_;
    const std::function<bool(const Embedding&)>& visit_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> order_;
    Embedding image_;
    std::vector<char> used_;
    bool stopped_ = false;
};

}  // namespace

void for_each_embedding(const EmbeddingQuery& query, const std::function<bool(const Embedding&)>& visit)
{
    if (!query.host || !query.pattern)
        throw FactorError("embedding query needs a host and a pattern");
    const auto& g = *query.host;
    const auto& h = *query.pattern;
    if (g.directed() != h.directed())
        throw FactorError("host and pattern must both be directed or both undirected");
    if (!query.role_class.empty()) {
        if (static_cast<int>(query.role_class.size()) != h.vertex_count())
            throw FactorError("role class list does not match the pattern");
        for (int c : query.role_class)
            if (c < 0 || c >= g.class_count())
                throw FactorError("role class out of range");
    }
    if (query.anchor && (*query.anchor < 0 || *query.anchor >= g.vertex_count()))
        throw FactorError("anchor vertex out of range");
    Embedder(query, visit).run(query.anchor);
}

std::vector<int> role_classes(const HostGraph& g, const PatternGraph& h)
{
    if (!g.partitioned())
        return {};
    if (g.class_count() != h.vertex_count())
        throw FactorError("partitioned host has " + std::to_string(g.class_count()) + " classes but the pattern has " +
                          std::to_string(h.vertex_count()) + " roles");
    std::vector<int> classes(h.vertex_count());
    for (int i = 0; i < h.vertex_count(); ++i)
        classes[i] = i;
    return classes;
}

CopyIndex enumerate_copies(const HostGraph& g, const PatternGraph& h, std::optional<int> anchor, std::size_t limit)
{
    EmbeddingQuery q;
    q.host = &g;
    q.pattern = &h;
    q.role_class = role_classes(g, h);
    q.anchor = anchor;

    CopyIndex index;
    index.through.resize(g.vertex_count());
    for_each_embedding(q, [&](const Embedding& e) {
        if (index.copies.size() >= limit)
            throw CopyLimitError("copy enumeration exceeded the limit of " + std::to_string(limit));
        int id = static_cast<int>(index.copies.size());
        index.copies.push_back(e);
        for (int v : e)
            index.through[v].push_back(id);
        return true;
    });
    return index;
}

}  // namespace hfactor
