#pragma once

#include "hfactor/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hfactor {

struct CorpusEntry {
    std::string name;
    std::string note;
    /// Edge-list text.
    std::string text;
    /// Expected report_digest(density_report(pattern)).
    std::string digest;
};

const std::vector<CorpusEntry>& corpus();

/// Throws GraphError for an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);
PatternGraph corpus_pattern(std::string_view name);

}  // namespace hfactor
