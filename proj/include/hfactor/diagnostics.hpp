#pragma once

#include "hfactor/factor.hpp"

#include <optional>
#include <vector>

namespace hfactor {

class DiagnosticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Host with the given vertices deleted; classes shrink accordingly, vertices renumbered in order.
HostGraph remove_vertices(const HostGraph& g, const std::vector<int>& removed);

/// Phi(G - Z) for a transversal Z (one vertex per class); for a set Y missing
/// exactly one class, the sum of w(Y + z) over z in that class.
BigInt weight_w(const HostGraph& g, const PatternGraph& h, const std::vector<int>& z,
                int vertex_cap = kDefaultCountCap);

struct WeightEntry {
    /// Z[i] lies in class i.
    std::vector<int> z;
    BigInt w;
};

/// w(Z) for every transversal Z, in lexicographic order of Z.
std::vector<WeightEntry> weight_table(const HostGraph& g, const PatternGraph& h, int vertex_cap = kDefaultCountCap);
/// Same table, transversals counted concurrently.
std::vector<WeightEntry> weight_table_parallel(const HostGraph& g, const PatternGraph& h,
                                               int vertex_cap = kDefaultCountCap);

/// Natural-log entropy of the copy through y in a uniformly random factor.
double factor_entropy(const HostGraph& g, const PatternGraph& h, int y, int vertex_cap = kDefaultCountCap);

struct ShearerCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

inline constexpr double kShearerSlack = 1e-9;

/// log Phi(G) against the summed entropies over one class.
ShearerCheck shearer_check(const HostGraph& g, const PatternGraph& h, int class_index,
                           int vertex_cap = kDefaultCountCap);

struct CViolation {
    std::vector<int> y;
    int missing_class = 0;
    BigInt max_w;
    BigInt median_w;
};

struct PropertyReport {
    BigInt phi;
    /// log Phi, or -infinity when Phi = 0.
    double log_phi = 0.0;
    double A_reference = 0.0;
    double D_p = 0.0;
    double D_deviation_max = 0.0;
    /// Absent when no factor exists.
    std::optional<double> maxr_w;
    std::vector<CViolation> C_violations;
    /// Sum of w(V(K)) over all copies K.
    BigInt weight_sum;
    std::vector<std::size_t> copies_through;
};

double log_big(const BigInt& x);

/// Lower median: element (size - 1) / 2 of the sorted values.
BigInt lower_median(std::vector<BigInt> values);

PropertyReport property_report(const HostGraph& g, const PatternGraph& h, double p, int vertex_cap = kDefaultCountCap);
PropertyReport property_report_parallel(const HostGraph& g, const PatternGraph& h, double p,
                                        int vertex_cap = kDefaultCountCap);

}  // namespace hfactor
