#pragma once

#include "hfactor/density.hpp"
#include "hfactor/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hfactor {

class CollapseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ContractResult {
    PatternGraph graph;
    /// Old vertex -> vertex of `graph`; the witness maps to the last vertex.
    std::vector<int> vertex_map;
};

/// Contracts `witness` to one vertex appended after the surviving vertices.
/// Internal witness edges vanish; external edges re-attach with accumulated
/// multiplicity. Throws unless the witness induces a maximum-density subgraph.
ContractResult collapse_step(const PatternGraph& g, std::span<const int> witness);

struct CollapseStep {
    std::vector<int> witness;
    PatternGraph result;
};

struct CollapseTrace {
    Rational m;
    std::vector<CollapseStep> steps;
    /// The collapsed multigraph.
    PatternGraph terminal;
    /// Original vertex set; only edges whose endpoints share a cluster.
    PatternGraph h_prime;
    /// Original vertex -> terminal vertex.
    std::vector<int> cluster_map;
    /// Vertex-balanced input whose only remaining dense witness was the whole graph.
    bool degenerate = false;

    std::vector<std::vector<int>> clusters() const;
};

struct CollapseOptions {
    /// When set, each step picks uniformly among all legal witnesses.
    std::optional<std::uint64_t> random_seed;
};

CollapseTrace collapse_full(const PatternGraph& h, const CollapseOptions& options = {});

}  // namespace hfactor
