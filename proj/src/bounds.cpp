#include "planartu/bounds.hpp"

#include <stdexcept>

namespace planartu {

BoundVerdict turan_verdict(long long n, long long m) {
    if (n < 1) throw std::invalid_argument("turan_verdict: n must be >= 1");
    if (m < 0) throw std::invalid_argument("turan_verdict: m must be >= 0");
    BoundVerdict v;
    v.n = n;
    v.m = m;
    v.lhs = 7 * m;
    v.rhs = 19 * n - 18;
    v.satisfied = v.lhs <= v.rhs;
    v.tight = v.lhs == v.rhs;
    return v;
}

long long turan_edge_cap(long long n) {
    if (n < 1) throw std::invalid_argument("turan_edge_cap: n must be >= 1");
    return (19 * n - 18) / 7;
}

long long max_planar_edges(long long n) {
    if (n < 1) throw std::invalid_argument("max_planar_edges: n must be >= 1");
    if (n == 1) return 0;
    if (n == 2) return 1;
    return 3 * n - 6;
}

CrossoverFacts crossover_facts() {
    CrossoverFacts f;
    f.planar_side_consistent = true;
    f.degree_side_consistent = true;
    for (long long n = f.checked_from; n <= f.checked_to; ++n) {
        bool planar_holds = 21 * n - 42 <= 19 * n - 18;
        if (planar_holds != (n <= 12)) f.planar_side_consistent = false;
        bool degree_holds = 35 * n <= 38 * n - 36;
        if (degree_holds != (n >= 12)) f.degree_side_consistent = false;
    }
    f.equality_at_12 = (21 * 12 - 42 == 19 * 12 - 18) && (35 * 12 == 38 * 12 - 36);
    return f;
}

DegreeSumIdentity degree_sum_identity(const DegreeHistogram& h) {
    long long n = 0, sum = 0;
    bool in_range = true;
    long long n3 = 0, n4 = 0, n6 = 0;
    for (auto [d, count] : h.counts) {
        if (count < 0) throw std::invalid_argument("negative histogram count");
        n += count;
        sum += static_cast<long long>(d) * count;
        if (count > 0 && (d < 3 || d > 6)) in_range = false;
        if (d == 3) n3 = count;
        if (d == 4) n4 = count;
        if (d == 6) n6 = count;
    }
    if (sum % 2 != 0)
        throw std::invalid_argument("degree sum is odd: impossible histogram");
    DegreeSumIdentity out;
    out.m_from_sum = sum / 2;
    out.regrouped_form_applies = in_range;
    if (in_range) {
        out.form_numerator = 5 * n + n6 - n4 - 2 * n3;
        out.cap_hypothesis = n6 <= n3 + n4;
        out.cap_conclusion = 2 * out.m_from_sum <= 5 * n;
        out.implication_holds = !out.cap_hypothesis || out.cap_conclusion;
    }
    return out;
}

}  // namespace planartu
