#pragma once

#include "hfactor/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hfactor {

class FactorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured copy limit.
class CopyLimitError : public FactorError {
public:
    using FactorError::FactorError;
};

/// image[x] is the host vertex playing role x.
using Embedding = std::vector<int>;

inline constexpr std::size_t kDefaultCopyLimit = 2'000'000;

/// Visits embeddings of `h` into `g` that preserve multiplicity (and direction).
///
/// `role_class[x]`, when non-empty, pins role x to that class of the partitioned
/// host. With `dedupe_automorphisms`, only the lexicographically smallest
/// embedding of each Aut(h) orbit is visited, so every copy appears once.
/// `anchor` restricts to embeddings whose image contains it.
struct EmbeddingQuery {
    const HostGraph* host = nullptr;
    const PatternGraph* pattern = nullptr;
    std::vector<int> role_class;
    bool dedupe_automorphisms = true;
    std::optional<int> anchor;
};

/// `visit` returns false to stop.
void for_each_embedding(const EmbeddingQuery& query, const std::function<bool(const Embedding&)>& visit);

/// Copies of H in G with, for every vertex x, the copies containing x.
struct CopyIndex {
    std::vector<Embedding> copies;
    std::vector<std::vector<int>> through;

    std::size_t total() const noexcept { return copies.size(); }
    /// D(x, G).
    std::size_t count_through(int x) const { return through[x].size(); }
};

/// Partitioned hosts pin role i to class i and need one class per role; unpartitioned
/// hosts count each copy once (orbit representatives under Aut(H)).
CopyIndex enumerate_copies(const HostGraph& g, const PatternGraph& h, std::optional<int> anchor = std::nullopt,
                           std::size_t limit = kDefaultCopyLimit);

/// Role classes implied by a partitioned host, or empty for an unpartitioned host.
std::vector<int> role_classes(const HostGraph& g, const PatternGraph& h);

}  // namespace hfactor
