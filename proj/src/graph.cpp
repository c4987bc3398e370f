#include "hfactor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace hfactor {

std::string_view to_string(GraphKind kind)
{
    switch (kind) {
    case GraphKind::simple: return "simple";
    case GraphKind::multi: return "multi";
    case GraphKind::digraph: return "digraph";
    }
    return "simple";
}

GraphKind parse_kind(std::string_view text)
{
    if (text == "simple") return GraphKind::simple;
    if (text == "multi") return GraphKind::multi;
    if (text == "digraph") return GraphKind::digraph;
    throw GraphError("unknown graph mode '" + std::string(text) + "'");
}

ParseError::ParseError(int line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line)
{
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(int n, GraphKind kind)
    : n_(n), kind_(kind)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    mult_.assign(static_cast<std::size_t>(n) * n, 0);
    out_.resize(n);
    if (directed())
        in_.resize(n);
}

void Multigraph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

int Multigraph::degree(int v) const
{
    int d = 0;
    for (int w : out_[v])
        d += multiplicity(v, w);
    if (directed())
        for (int w : in_[v])
            d += multiplicity(w, v);
    return d;
}

void Multigraph::add_edge(int u, int v, int count)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    if (count < 1)
        throw GraphError("edge multiplicity must be positive");

    auto& uv = mult_[static_cast<std::size_t>(u) * n_ + v];
    if (kind_ != GraphKind::multi && uv + count > 1)
        throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v) + " in "
                         + std::string(to_string(kind_)) + " graph");
    if (uv + count > std::numeric_limits<std::uint16_t>::max())
        throw GraphError("edge multiplicity overflow");

    bool fresh = uv == 0;
    uv = static_cast<std::uint16_t>(uv + count);
    if (!directed())
        mult_[static_cast<std::size_t>(v) * n_ + u] = uv;
    total_ += count;

    if (fresh) {
        out_[u].push_back(v);
        if (directed())
            in_[v].push_back(u);
        else
            out_[v].push_back(u);
    }
}

std::vector<Multigraph::Edge> Multigraph::edges() const
{
    std::vector<Edge> result;
    for (int u = 0; u < n_; ++u)
        for (int v = directed() ? 0 : u + 1; v < n_; ++v)
            if (int m = multiplicity(u, v); m > 0)
                result.push_back({u, v, m});
    return result;
}

bool Multigraph::operator==(const Multigraph& other) const
{
    return n_ == other.n_ && kind_ == other.kind_ && mult_ == other.mult_;
}

// ---------------------------------------------------------------------------
// PatternGraph / HostGraph

PatternGraph::PatternGraph(int n, GraphKind kind)
    : Multigraph(n, kind)
{
    roles_.reserve(n);
    for (int i = 0; i < n; ++i)
        roles_.push_back(std::to_string(i));
}

void PatternGraph::set_role_name(int v, std::string name)
{
    check_vertex(v);
    if (name.empty() || name.find_first_of(" \t#") != std::string::npos)
        throw GraphError("role names must be non-empty and contain no whitespace or '#'");
    roles_[v] = std::move(name);
}

PatternGraph PatternGraph::with_kind(GraphKind kind) const
{
    PatternGraph g(n_, kind);
    g.roles_ = roles_;
    for (const auto& e : edges())
        g.add_edge(e.u, e.v, e.multiplicity);
    return g;
}

HostGraph::HostGraph(int n, GraphKind kind)
    : Multigraph(n, kind)
{
}

void HostGraph::set_partition(std::vector<std::vector<int>> classes)
{
    if (classes.empty()) {
        classes_.clear();
        class_of_.clear();
        return;
    }
    std::vector<int> owner(n_, -1);
    const auto size = classes.front().size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].size() != size)
            throw GraphError("partition classes have unequal sizes");
        for (int v : classes[i]) {
            check_vertex(v);
            if (owner[v] != -1)
                throw GraphError("vertex " + std::to_string(v) + " appears in two partition classes");
            owner[v] = static_cast<int>(i);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
        throw GraphError("partition does not cover every vertex");
    for (auto& c : classes)
        std::sort(c.begin(), c.end());
    classes_ = std::move(classes);
    class_of_ = std::move(owner);
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

struct Document {
    int n = -1;
    GraphKind kind = GraphKind::simple;
    std::vector<std::pair<int, std::string>> roles;
    std::vector<std::vector<int>> parts;
    int parts_line = 0;
    struct EdgeLine {
        int u, v, line;
    };
    std::vector<EdgeLine> edges;
};

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return value;
}

Document parse_document(std::string_view text)
{
    Document doc;
    int line_no = 0;
    bool mode_seen = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        auto directive = tokens.front();

        if (directive == "v") {
            if (doc.n >= 0)
                throw ParseError(line_no, "vertex count given twice");
            if (tokens.size() != 2)
                throw ParseError(line_no, "usage: v <count>");
            doc.n = parse_int(tokens[1], line_no);
            if (doc.n < 0)
                throw ParseError(line_no, "negative vertex count");
            continue;
        }
        if (directive == "mode") {
            if (mode_seen || !doc.edges.empty())
                throw ParseError(line_no, "mode must appear once, before any edge");
            if (tokens.size() != 2)
                throw ParseError(line_no, "usage: mode simple|multi|digraph");
            try {
                doc.kind = parse_kind(tokens[1]);
            } catch (const GraphError& e) {
                throw ParseError(line_no, e.what());
            }
            mode_seen = true;
            continue;
        }
        if (doc.n < 0)
            throw ParseError(line_no, "'" + std::string(directive) + "' before 'v <count>'");

        auto vertex = [&](std::string_view tok) {
            int v = parse_int(tok, line_no);
            if (v < 0 || v >= doc.n)
                throw ParseError(line_no, "vertex " + std::string(tok) + " out of range");
            return v;
        };

        if (directive == "e") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "usage: e <u> <v>");
            int u = vertex(tokens[1]);
            int v = vertex(tokens[2]);
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            doc.edges.push_back({u, v, line_no});
        } else if (directive == "part") {
            if (tokens.size() < 2)
                throw ParseError(line_no, "usage: part <i> <vertex>...");
            int idx = parse_int(tokens[1], line_no);
            if (idx != static_cast<int>(doc.parts.size()))
                throw ParseError(line_no, "part indices must be consecutive from 0");
            std::vector<int> members;
            for (std::size_t i = 2; i < tokens.size(); ++i)
                members.push_back(vertex(tokens[i]));
            doc.parts.push_back(std::move(members));
            doc.parts_line = line_no;
        } else if (directive == "role") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "usage: role <vertex> <name>");
            doc.roles.emplace_back(vertex(tokens[1]), std::string(tokens[2]));
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
        }
    }
    if (doc.n < 0)
        throw ParseError(line_no, "missing 'v <count>'");
    return doc;
}

template <class G>
void fill_edges(G& g, const Document& doc)
{
    for (const auto& e : doc.edges) {
        if (doc.kind != GraphKind::multi && g.multiplicity(e.u, e.v) > 0)
            throw ParseError(e.line, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v)
                                         + " in " + std::string(to_string(doc.kind)) + " mode");
        g.add_edge(e.u, e.v);
    }
}

void write_header(std::ostringstream& out, const Multigraph& g)
{
    out << "v " << g.vertex_count() << '\n';
    out << "mode " << to_string(g.kind()) << '\n';
}

void write_edges(std::ostringstream& out, const Multigraph& g)
{
    for (const auto& e : g.edges())
        for (int i = 0; i < e.multiplicity; ++i)
            out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace

PatternGraph parse_pattern(std::string_view text)
{
    auto doc = parse_document(text);
    if (!doc.parts.empty())
        throw ParseError(doc.parts_line, "pattern graphs cannot carry a partition");
    PatternGraph g(doc.n, doc.kind);
    for (auto& [v, name] : doc.roles)
        g.set_role_name(v, name);
    fill_edges(g, doc);
    return g;
}

HostGraph parse_host(std::string_view text)
{
    auto doc = parse_document(text);
    HostGraph g(doc.n, doc.kind);
    fill_edges(g, doc);
    if (!doc.parts.empty()) {
        try {
            g.set_partition(doc.parts);
        } catch (const GraphError& e) {
            throw ParseError(doc.parts_line, e.what());
        }
    }
    return g;
}

std::string serialize(const PatternGraph& g)
{
    std::ostringstream out;
    write_header(out, g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.role_name(v) != std::to_string(v))
            out << "role " << v << ' ' << g.role_name(v) << '\n';
    write_edges(out, g);
    return out.str();
}

std::string serialize(const HostGraph& g)
{
    std::ostringstream out;
    write_header(out, g);
    for (int i = 0; i < g.class_count(); ++i) {
        out << "part " << i;
        for (int v : g.part(i))
            out << ' ' << v;
        out << '\n';
    }
    write_edges(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// Structure

PatternGraph induced_subgraph(const PatternGraph& g, std::span<const int> vertices)
{
    PatternGraph sub(static_cast<int>(vertices.size()), g.kind());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        sub.set_role_name(static_cast<int>(i), g.role_name(vertices[i]));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (!g.directed() && j <= i)
                continue;
            if (int m = g.multiplicity(vertices[i], vertices[j]); m > 0)
                sub.add_edge(static_cast<int>(i), static_cast<int>(j), m);
        }
    return sub;
}

std::vector<std::vector<int>> connected_components(const Multigraph& g)
{
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<int>> result;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(result.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto visit = [&](int w) {
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
            };
            for (int w : g.neighbors(members[i]))
                visit(w);
            for (int w : g.in_neighbors(members[i]))
                visit(w);
        }
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
    }
    return result;
}

namespace {

std::vector<int> sorted_degrees(const Multigraph& g)
{
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

void for_each_isomorphism(const Multigraph& a, const Multigraph& b,
                          const std::function<bool(const std::vector<int>&)>& visit)
{
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.directed() != b.directed()
        || a.total_multiplicity() != b.total_multiplicity())
        return;
    if (sorted_degrees(a) != sorted_degrees(b))
        return;

    std::vector<int> deg_a(n), deg_b(n);
    for (int v = 0; v < n; ++v) {
        deg_a[v] = a.degree(v);
        deg_b[v] = b.degree(v);
    }

    // Place high-degree vertices first: they prune hardest.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return deg_a[x] > deg_a[y]; });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    bool stop = false;

    std::function<void(int)> extend = [&](int depth) {
        if (stop)
            return;
        if (depth == n) {
            if (!visit(map))
                stop = true;
            return;
        }
        int x = order[depth];
        for (int y = 0; y < n && !stop; ++y) {
            if (used[y] || deg_b[y] != deg_a[x])
                continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int w = order[i];
                ok = a.multiplicity(x, w) == b.multiplicity(y, map[w])
                     && a.multiplicity(w, x) == b.multiplicity(map[w], y);
            }
            if (!ok)
                continue;
            map[x] = y;
            used[y] = 1;
            extend(depth + 1);
            used[y] = 0;
            map[x] = -1;
        }
    };
    extend(0);
}

std::optional<std::vector<int>> find_isomorphism(const PatternGraph& a, const PatternGraph& b)
{
    if (a.vertex_count() > kIsomorphismVertexCap || b.vertex_count() > kIsomorphismVertexCap)
        throw GraphError("isomorphism test limited to " + std::to_string(kIsomorphismVertexCap) + " vertices");
    std::optional<std::vector<int>> found;
    for_each_isomorphism(a, b, [&](const std::vector<int>& m) {
        found = m;
        return false;
    });
    return found;
}

bool are_isomorphic(const PatternGraph& a, const PatternGraph& b)
{
    return find_isomorphism(a, b).has_value();
}

std::vector<std::vector<int>> automorphisms(const Multigraph& g)
{
    std::vector<std::vector<int>> result;
    for_each_isomorphism(g, g, [&](const std::vector<int>& m) {
        result.push_back(m);
        return true;
    });
    return result;
}

HostGraph blowup_pattern(const PatternGraph& h, int r)
{
    if (r < 1)
        throw GraphError("blowup factor must be positive");
    const int k = h.vertex_count();
    GraphKind kind = h.kind();
    HostGraph g(k * r, kind);
    std::vector<std::vector<int>> classes(k);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < r; ++a)
            classes[i].push_back(i * r + a);
    for (const auto& e : h.edges())
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                g.add_edge(e.u * r + a, e.v * r + b, e.multiplicity);
    g.set_partition(std::move(classes));
    return g;
}

}  // namespace hfactor
