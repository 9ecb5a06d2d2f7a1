#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "planartu/graph.hpp"

namespace planartu {

/// Isomorphism-class certificate: vertex count plus the lexicographically
/// smallest upper-triangle adjacency bit string over all labelings compatible
/// with iterated degree/neighborhood refinement. Equal certificates iff
/// isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> order;  // canonical position -> original vertex
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into canonical order.
Graph canonical_relabel(const Graph& g);

}  // namespace planartu
