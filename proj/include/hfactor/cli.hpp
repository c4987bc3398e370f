#pragma once

#include "hfactor/graph.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace hfactor::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 1 domain or input error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads a file, or a bundled graph when `path` is "corpus:<name>".
PatternGraph load_pattern(const std::string& path);
HostGraph load_host(const std::string& path);

/// FNV-1a over the pattern's canonical edge-list text.
std::uint64_t pattern_hash(const PatternGraph& h);

}  // namespace hfactor::cli
