#pragma once

#include "hfactor/collapse.hpp"
#include "hfactor/factor.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hfactor {

/// How the host's edges are shared between the two phases.
enum class ShareSplit {
    /// split_edges(G, 2): every edge goes to exactly one phase.
    disjoint,
    /// Each share marginally G(n, p') with 1 - p = (1 - p')^2, coupled so their union is G.
    overlapping,
};

struct TwoPhaseOptions {
    SearchOptions search;
    ShareSplit split = ShareSplit::disjoint;
    /// Edge probability of the host; needed by the overlapping split.
    double p = 0.0;
    int greedy_restarts = 4;
};

struct TwoPhaseResult {
    SearchStatus status = SearchStatus::absent;
    /// Phase that decided a failure: "h_prime", "quotient" or "stitch".
    std::string phase;
    std::optional<FactorAssignment> factor;
    /// Quotient host and its pattern, kept for inspection.
    std::optional<HostGraph> quotient;
    CollapseTrace trace;
};

/// Both shares as used by two_phase_factor.
std::pair<HostGraph, HostGraph> phase_shares(const HostGraph& g, std::uint64_t seed, const TwoPhaseOptions& options);

/// Embeds the collapsed clusters of H first, then finds the collapsed pattern
/// over them in a partitioned quotient host, and expands back to an H-factor.
TwoPhaseResult two_phase_factor(const HostGraph& g, const PatternGraph& h, std::uint64_t seed,
                                const TwoPhaseOptions& options = {});

}  // namespace hfactor
