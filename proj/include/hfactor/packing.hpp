#pragma once

#include "hfactor/copies.hpp"
#include "hfactor/density.hpp"

#include <cstdint>
#include <vector>

namespace hfactor {

using HostMask = std::uint64_t;

/// Exact search and counting address host vertices through a 64-bit mask.
inline constexpr int kMaskVertexCap = 64;

enum class SearchStatus { found, absent, budget };

std::string_view to_string(SearchStatus s);

/// One candidate block of a cover: a copy of a piece type.
struct Piece {
    HostMask mask = 0;
    int type = 0;
    Embedding image;
};

/// Blocks to cover a host with, and how many blocks of each type may be used.
struct PiecePool {
    int vertex_count = 0;
    std::vector<Piece> pieces;
    std::vector<int> quota;
};

struct CoverResult {
    SearchStatus status = SearchStatus::absent;
    /// Indices into the pool's pieces.
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
};

/// Backtracking exact cover. Branches on the uncovered vertex with the fewest
/// live pieces and remembers failed (covered, quota) states.
CoverResult exact_cover(const PiecePool& pool, std::uint64_t node_budget);

/// Number of piece sets covering every vertex exactly once within the quotas.
BigInt count_covers(const PiecePool& pool);

}  // namespace hfactor
