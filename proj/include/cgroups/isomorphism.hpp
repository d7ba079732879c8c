#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgroups/finite_group.hpp"

namespace cgroups {

/// Cheap isomorphism invariants; equality is necessary for isomorphism.
struct Fingerprint {
    int order = 0;
    std::vector<int> element_orders;  // sorted multiset
    int center_order = 0;
    int derived_order = 0;
    int nilpotency_class = -1;  // -1 = not nilpotent
    int derived_length = -1;    // -1 = not solvable

    bool operator==(const Fingerprint&) const = default;
    std::string describe_mismatch(const Fingerprint& other) const;
};

Fingerprint invariant_fingerprint(const FiniteGroup& g, const Limits& lim = {});

struct IsoResult {
    bool isomorphic = false;
    std::optional<std::vector<int>> map;  // g-element -> h-element bijection
    std::string obstruction;              // invariant mismatch, when detected
};

/// Backtracking over images of a minimal generating set of g; candidate
/// images restricted to h-elements of equal order and centrality. Returned
/// maps are verified homomorphic bijections (exhaustive pair check).
IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& lim = {});

}  // namespace cgroups
