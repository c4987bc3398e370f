#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfactor {

enum class GraphKind { simple, multi, digraph };

std::string_view to_string(GraphKind kind);
GraphKind parse_kind(std::string_view text);

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the edge-list parser; carries the 1-based offending line.
class ParseError : public GraphError {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Dense multiplicity storage shared by pattern and host graphs.
///
/// Vertices are 0-based integers. Undirected kinds store a symmetric
/// multiplicity matrix; the digraph kind stores arcs u->v. Self-loops are
/// rejected on insertion and simple graphs never exceed multiplicity one.
class Multigraph {
public:
    struct Edge {
        int u;
        int v;
        int multiplicity;
        bool operator==(const Edge&) const = default;
    };

    Multigraph() = default;
    Multigraph(int n, GraphKind kind);

    int vertex_count() const noexcept { return n_; }
    GraphKind kind() const noexcept { return kind_; }
    bool directed() const noexcept { return kind_ == GraphKind::digraph; }

    int multiplicity(int u, int v) const
    {
        return mult_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

    /// Sum of multiplicities over all stored pairs (arcs for digraphs).
    int total_multiplicity() const noexcept { return total_; }

    /// Out-neighbours for digraphs, plain neighbours otherwise.
    const std::vector<int>& neighbors(int v) const { return out_[v]; }
    /// In-neighbours for digraphs, plain neighbours otherwise.
    const std::vector<int>& in_neighbors(int v) const { return directed() ? in_[v] : out_[v]; }

    /// Incident multiplicity (in + out for digraphs).
    int degree(int v) const;

    void add_edge(int u, int v, int count = 1);

    /// Lexicographically sorted; u < v for undirected kinds.
    std::vector<Edge> edges() const;

    bool operator==(const Multigraph& other) const;

protected:
    void check_vertex(int v) const;

    int n_ = 0;
    GraphKind kind_ = GraphKind::simple;
    std::vector<std::uint16_t> mult_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int total_ = 0;
};

/// A small fixed (multi)graph H whose copies make up a factor.
class PatternGraph : public Multigraph {
public:
    PatternGraph() = default;
    PatternGraph(int n, GraphKind kind = GraphKind::simple);

    const std::string& role_name(int v) const { return roles_[v]; }
    const std::vector<std::string>& roles() const noexcept { return roles_; }
    void set_role_name(int v, std::string name);

    /// Same vertex set and edges; used when collapsing promotes a simple graph to a multigraph.
    PatternGraph with_kind(GraphKind kind) const;

    bool operator==(const PatternGraph& other) const = default;

private:
    std::vector<std::string> roles_;
};

/// A sampled or loaded host graph, optionally partitioned into equal role classes.
class HostGraph : public Multigraph {
public:
    HostGraph() = default;
    HostGraph(int n, GraphKind kind = GraphKind::simple);

    bool partitioned() const noexcept { return !classes_.empty(); }
    int class_count() const noexcept { return static_cast<int>(classes_.size()); }
    int class_size() const { return classes_.empty() ? 0 : static_cast<int>(classes_.front().size()); }
    const std::vector<int>& part(int i) const { return classes_[i]; }
    const std::vector<std::vector<int>>& parts() const noexcept { return classes_; }
    /// Class index of v, or -1 when the host is unpartitioned.
    int class_of(int v) const { return classes_.empty() ? -1 : class_of_[v]; }

    /// Classes must be disjoint, cover every vertex and have equal size.
    void set_partition(std::vector<std::vector<int>> classes);

    bool operator==(const HostGraph& other) const = default;

private:
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

PatternGraph parse_pattern(std::string_view text);
HostGraph parse_host(std::string_view text);

std::string serialize(const PatternGraph& g);
std::string serialize(const HostGraph& g);

/// Vertices of the result are `vertices` in the given order; role names carry over.
PatternGraph induced_subgraph(const PatternGraph& g, std::span<const int> vertices);

/// Vertex sets of the connected components (weak components for digraphs), each sorted.
std::vector<std::vector<int>> connected_components(const Multigraph& g);

inline constexpr int kIsomorphismVertexCap = 12;

/// Calls `visit(mapping)` for every bijection a -> b preserving multiplicities
/// (and directions); stop early by returning false. No size cap.
void for_each_isomorphism(const Multigraph& a, const Multigraph& b,
                          const std::function<bool(const std::vector<int>&)>& visit);

/// Brute-force search capped at kIsomorphismVertexCap vertices.
std::optional<std::vector<int>> find_isomorphism(const PatternGraph& a, const PatternGraph& b);
bool are_isomorphic(const PatternGraph& a, const PatternGraph& b);

std::vector<std::vector<int>> automorphisms(const Multigraph& g);

/// r-fold blowup B(H, r): class i holds vertices i*r .. i*r + r - 1.
HostGraph blowup_pattern(const PatternGraph& h, int r);

}  // namespace hfactor
