#pragma once

#include "hfactor/copies.hpp"
#include "hfactor/density.hpp"
#include "hfactor/packing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfactor {

struct FactorAssignment {
    std::vector<Embedding> copies;
    /// Host vertices left out; empty for a full factor.
    std::vector<int> uncovered;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;
inline constexpr int kDefaultCountCap = 24;

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t copy_limit = kDefaultCopyLimit;
};

struct FactorResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<FactorAssignment> factor;
    std::uint64_t nodes = 0;
};

/// One isomorphism class of components of H (one class per component when partitioned).
struct ComponentType {
    PatternGraph shape;
    /// members[c][i]: the role of H played by shape vertex i in the c-th component of this type.
    std::vector<std::vector<int>> members;
};

std::vector<ComponentType> component_types(const PatternGraph& h, bool partitioned);

/// Number of H-copies in a factor of g; throws when g cannot hold one.
int factor_size(const HostGraph& g, const PatternGraph& h);

/// Component copies of H in g, with quotas fixed by the factor size.
PiecePool component_pool(const HostGraph& g, const PatternGraph& h, const std::vector<ComponentType>& types,
                         std::size_t copy_limit = kDefaultCopyLimit);

/// Rebuilds H-copies from a cover of a component pool.
FactorAssignment assemble_factor(const PiecePool& pool, const std::vector<int>& chosen,
                                 const std::vector<ComponentType>& types, const PatternGraph& h);

FactorResult find_factor(const HostGraph& g, const PatternGraph& h, const SearchOptions& options = {});

/// Number of H-factors of g as unordered sets of copies.
BigInt count_factors(const HostGraph& g, const PatternGraph& h, int vertex_cap = kDefaultCountCap,
                     std::size_t copy_limit = kDefaultCopyLimit);

/// Empty when `a` is a valid (partial unless `require_full`) factor, otherwise the first problem found.
std::optional<std::string> validate_factor(const HostGraph& g, const PatternGraph& h, const FactorAssignment& a,
                                           bool require_full);

struct PartialOptions {
    std::uint64_t node_budget = 2'000'000;
    std::size_t copy_limit = kDefaultCopyLimit;
    int restarts = 8;
    /// Hosts up to this many vertices get an exact search when the greedy packing falls short.
    int exact_cap = 40;
};

struct PartialResult {
    bool target_met = false;
    /// The exact fallback ran out of nodes before settling the question.
    bool budget_exhausted = false;
    FactorAssignment assignment;
};

/// Vertex-disjoint copies covering at least (1 - eps) of the host, or the best packing found.
PartialResult partial_factor(const HostGraph& g, const PatternGraph& h, double eps, std::uint64_t seed,
                             const PartialOptions& options = {});

struct Th2Report {
    /// Every host vertex lies in some copy.
    bool cond1 = false;
    /// Every role can be played by at least n / v_H host vertices.
    bool cond2 = false;
    std::vector<int> role_counts;
};

Th2Report check_th2(const HostGraph& g, const PatternGraph& h, std::size_t copy_limit = kDefaultCopyLimit);

}  // namespace hfactor
