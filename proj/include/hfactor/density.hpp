#pragma once

#include "hfactor/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfactor {

/// Exact rational, always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);

/// Vertex subset of a pattern graph, bit i set for vertex i.
using VertexMask = std::uint32_t;

inline constexpr int kDensityVertexCap = 16;

std::vector<int> mask_vertices(VertexMask mask);
VertexMask vertices_mask(const std::vector<int>& vertices);

/// Thrown when subset enumeration would exceed kDensityVertexCap.
class DensityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge multiplicity of every induced subgraph, indexed by vertex mask.
std::vector<int> induced_edge_counts(const PatternGraph& h);

/// |E(H)| / (|V(H)| - 1), counting edge multiplicity.
Rational density_d(const PatternGraph& h);

struct DenseSubset {
    Rational density;
    VertexMask witness = 0;
    int edges = 0;
};

/// m(H). Witness tie rule: highest density, then most edges, then smallest mask.
DenseSubset max_density(const PatternGraph& h);

enum class BalanceClass { strictly_balanced, vertex_balanced_not_strict, non_vertex_balanced };

std::string_view to_string(BalanceClass c);

struct DensityReport {
    Rational d;
    Rational m;
    VertexMask m_witness = 0;
    /// m(v, H) with its witness subset, indexed by vertex.
    std::vector<DenseSubset> per_vertex_m;
    BalanceClass balance_class = BalanceClass::strictly_balanced;
    /// d(H) == m(H).
    bool balanced = false;
    /// Present only when every m(v, H) equals m(H).
    std::optional<int> s;
    std::vector<std::optional<int>> s_per_vertex;
};

DensityReport density_report(const PatternGraph& h);

enum class ThresholdStatus { proved_non_vertex_balanced, proved_strictly_balanced, conjecture_only };

std::string_view to_string(ThresholdStatus s);

/// Threshold shape n^{density_exponent} (log n)^{log_exponent}.
struct ThresholdDescriptor {
    Rational density_exponent;
    Rational log_exponent;
    ThresholdStatus status = ThresholdStatus::conjecture_only;

    /// Evaluates the shape at n with natural logarithms.
    double evaluate(double n) const;
};

ThresholdDescriptor threshold_descriptor(const DensityReport& report, const PatternGraph& h);
ThresholdDescriptor threshold_descriptor(const PatternGraph& h);

/// Compact canonical summary used for corpus golden digests,
/// e.g. "d=3/2;m=3/2;class=strictly_balanced;balanced=1;s=3".
std::string report_digest(const DensityReport& r);

}  // namespace hfactor
