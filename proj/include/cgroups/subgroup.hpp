#pragma once

#include <vector>

#include "cgroups/finite_group.hpp"

namespace cgroups {

/// An element-index set closed under the parent's operation. Sorted member
/// list plus a bitset mirror for O(1) membership tests.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted
    std::vector<char> in;      // size parent->order()

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const { return in[static_cast<std::size_t>(x)] != 0; }
    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool subset_of(const Subgroup& o) const;

    static Subgroup of(const FiniteGroup& g, std::vector<int> sorted_members);
};

/// Smallest subgroup containing seed (orbit-style saturation).
Subgroup closure(const FiniteGroup& g, const std::vector<int>& seed);

/// True iff seed generates the whole group. Uses the Lagrange early exit:
/// once the partial closure exceeds the largest proper divisor of |g| it
/// must be everything.
bool generates(const FiniteGroup& g, const std::vector<int>& seed);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
/// Subgroup of the parent generated by commutators of members of h.
Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup, found by closing cyclic subgroups and unions of pairs
/// until fixpoint. Sorted by (order, members). Throws OrderCapExceeded
/// above lim.subgroup_enum_cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& lim = {});
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& lim = {});

/// Frattini subgroup. For p-groups: closure of p-th powers and commutators
/// (Burnside route), no lattice enumeration needed. Otherwise the
/// intersection of all maximal subgroups, subject to the enumeration cap.
Subgroup frattini(const FiniteGroup& g, const Limits& lim = {});
/// Independent route: intersection of all maximal subgroups.
Subgroup frattini_via_maximals(const FiniteGroup& g, const Limits& lim = {});

Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const FiniteGroup& g, const Subgroup& h, int* witness = nullptr);

/// Materializes a subgroup as a standalone group (sub-table restriction,
/// members re-indexed in sorted order).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h,
                              const Limits& lim = {});

struct QuotientResult {
    FiniteGroup group;
    std::vector<int> projection;  // element index -> coset index
};

/// Left-coset quotient; cosets ordered by minimal member index.
/// Throws NotNormal with a conjugating witness when h is not normal.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& h, const Limits& lim = {});

}  // namespace cgroups
