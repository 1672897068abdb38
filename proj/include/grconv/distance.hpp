#pragma once

#include "grconv/code.hpp"

namespace grconv {

struct catastrophic_encoder_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct no_codeword_under_cap : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct search_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DistanceMode { exact, upper_bound };

struct DistanceReport {
    int value = 0;
    DistanceMode mode = DistanceMode::exact;
    std::vector<ScalarPoly> witness_input;
    std::vector<ScalarPoly> witness_codeword;
    long long explored_states = 0;
    std::optional<int> cap_used;
};

struct SearchOptions {
    int weight_cap = 64;
    long long node_budget = 0;  // 0: use default_node_budget()
};

/// Node budget for searches; GRCONV_NODE_BUDGET overrides the default 1e7.
long long default_node_budget();

/// Exact free distance by lowest-accumulated-weight-first search over the
/// encoder state graph (states are the last M input blocks). Requires a
/// noncatastrophic encoder over a finite field. At equal weight the
/// lexicographically smallest packed state expands first, so the explored
/// state count is reproducible. If the node budget is exhausted the report
/// degrades to an upper bound with the best witness found.
DistanceReport free_distance_exact(const ConvCode& code, SearchOptions opts = {});

/// Exhaustive minimum over all nonzero inputs of degree <= max_input_degree,
/// by depth-first enumeration with weight pruning. An upper bound on the
/// free distance by definition; equals it once the degree is large enough.
DistanceReport free_distance_bounded(const ConvCode& code, int max_input_degree,
                                     SearchOptions opts = {});

/// Minimum weight of u*M over nonzero messages u (q^k enumerable).
int block_min_distance(const Mat& m);
/// Minimum distance of the dual code, via a null-space basis.
int block_dual_distance(const Mat& m);

/// Image of a characteristic-0 code under coefficient-wise specialization
/// into GF(p).
ConvCode specialize_code(const ConvCode& code, long long p);

/// Exact free distance of the GF(p) specialization of a characteristic-0
/// code. The report's witness lives over GF(p); lift_specialized_witness
/// transfers it back as a characteristic-0 upper-bound witness.
DistanceReport char0_distance_via_specialization(const ConvCode& code, long long p,
                                                 SearchOptions opts = {});

struct LiftedWitness {
    std::vector<ScalarPoly> input;     // over the characteristic-0 field
    std::vector<ScalarPoly> codeword;
    int weight = 0;  // upper bound on the characteristic-0 free distance
};
LiftedWitness lift_specialized_witness(const ConvCode& char0_code, const DistanceReport& report);

}  // namespace grconv
