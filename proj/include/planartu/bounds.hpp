#pragma once

#include <cstdint>

#include "planartu/graph.hpp"

namespace planartu {

/// Integer-exact comparison of 7m against 19n - 18. The rational bound
/// 19n/7 - 18/7 never materializes as a float: the tight case must be exact.
struct BoundVerdict {
    long long n = 0;
    long long m = 0;
    long long lhs = 0;  // 7m
    long long rhs = 0;  // 19n - 18
    bool satisfied = false;
    bool tight = false;
};

BoundVerdict turan_verdict(long long n, long long m);

/// Largest m with 7m <= 19n - 18, i.e. floor((19n - 18) / 7).
long long turan_edge_cap(long long n);

/// 3n - 6 for n >= 3; complete graphs for n = 1, 2.
long long max_planar_edges(long long n);

/// Integer verification over n = 1..1000 that
///   21n - 42 <= 19n - 18  iff  n <= 12   (3n-6 below the bound), and
///   35n <= 38n - 36       iff  n >= 12   (5n/2 below the bound).
struct CrossoverFacts {
    int checked_from = 1;
    int checked_to = 1000;
    bool planar_side_consistent = false;  // 3n-6 side matches n <= 12 exactly
    bool degree_side_consistent = false;  // 5n/2 side matches n >= 12 exactly
    bool equality_at_12 = false;          // both sides meet the bound exactly
};
CrossoverFacts crossover_facts();

/// Edge count from a degree histogram two ways: the handshake sum and, when
/// degrees lie in {3,4,5,6}, the regrouped form (5n + n6 - n4 - 2n3) / 2.
struct DegreeSumIdentity {
    long long m_from_sum = 0;
    bool regrouped_form_applies = false;  // degrees confined to {3,4,5,6}
    long long form_numerator = 0;     // 5n + n6 - n4 - 2n3
    int form_denominator = 2;
    bool cap_hypothesis = false;   // n6 <= n3 + n4
    bool cap_conclusion = false;   // 2m <= 5n
    bool implication_holds = false;
};
DegreeSumIdentity degree_sum_identity(const DegreeHistogram& h);

}  // namespace planartu
