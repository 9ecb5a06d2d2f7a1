#pragma once

#include "planartu/graph.hpp"

namespace planartu {

enum class EulerVerdict { definitely_nonplanar, unknown };

/// Edge-count prefilter: nonplanar whenever n >= 3 and m > 3n - 6.
/// "unknown" otherwise (the bound cannot certify planarity).
EulerVerdict euler_prefilter(const Graph& g);

/// Complete planarity decision (left-right criterion).
bool is_planar(const Graph& g);

}  // namespace planartu
