#pragma once

#include "hfactor/graph.hpp"

#include <cstdint>
#include <vector>

namespace hfactor {

enum class Model { gnp, partitioned, digraph };

std::string_view to_string(Model m);
Model parse_model(std::string_view text);

class SampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SampleSpec {
    Model model = Model::gnp;
    /// Used by the partitioned model only.
    PatternGraph pattern;
    /// Vertex count n for gnp and digraph; class size r for partitioned.
    int size = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Uniform in [0,1) determined by (seed, tag, a, b, c) alone.
double counter_uniform(std::uint64_t seed, std::uint64_t tag, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c = 0);

/// Seed of the i-th trial under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

HostGraph sample_gnp(int n, double p, std::uint64_t seed);
/// Same output as sample_gnp; rows are hashed concurrently.
HostGraph sample_gnp_parallel(int n, double p, std::uint64_t seed);

/// Each slot of blowup_pattern(pattern, r) kept with probability p.
HostGraph sample_partitioned(const PatternGraph& pattern, int r, double p, std::uint64_t seed);

/// Each pair carries an arc with probability p, direction fair.
HostGraph sample_dnp(int n, double p, std::uint64_t seed);

HostGraph sample(const SampleSpec& spec);

/// Keeps arcs of `d` that run from class i to class j along a pattern arc i -> j.
/// `classes[i]` holds the host vertices of role i.
HostGraph orient_restrict(const HostGraph& d, const PatternGraph& pattern,
                          const std::vector<std::vector<int>>& classes);

/// Assigns every edge unit of `g` to one of `ways` shares uniformly at random.
std::vector<HostGraph> split_edges(const HostGraph& g, int ways, std::uint64_t seed);

}  // namespace hfactor
