#pragma once

#include "cgroups/finite_group.hpp"
#include "cgroups/presentation.hpp"

namespace cgroups {

struct EnumerationResult {
    FiniteGroup group;
    std::vector<int> generator_elements;  // element index realizing each generator
};

/// HLT-style coset enumeration over the trivial subgroup, with union-find
/// coincidence processing. On completion the coset action is the regular
/// representation, converted to a Cayley table; the group order is the
/// number of live cosets. Deterministic: new cosets are introduced at the
/// first undefined entry in row-major scan order.
/// Throws EnumerationOverflow when live cosets exceed max_cosets.
EnumerationResult coset_enumerate(const Presentation& p, int max_cosets = 65536,
                                  const Limits& lim = {});

}  // namespace cgroups
