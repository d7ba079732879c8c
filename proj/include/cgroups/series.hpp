#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cgroups/finite_group.hpp"
#include "cgroups/subgroup.hpp"

namespace cgroups {

enum class SeriesKind { UpperCentral, Derived };

struct SeriesReport {
    SeriesKind kind;
    std::vector<int> subgroup_orders;
    bool terminated = false;  // upper central: reached G; derived: reached {e}
    int length = 0;
};

/// Z1 = Z(G), Z_i = preimage of Z(G/Z_{i-1}) under the projection.
/// terminated means the series reaches G; length is then the nilpotency
/// class. Trivial group: class 0, empty series.
SeriesReport upper_central_series(const FiniteGroup& g, const Limits& lim = {});

/// G' >= G'' >= ... until stabilization; terminated means it reaches {e}.
SeriesReport derived_series(const FiniteGroup& g);

std::optional<int> nilpotency_class(const FiniteGroup& g, const Limits& lim = {});
bool is_solvable(const FiniteGroup& g);

/// The prime p with |g| = p^k, absent for the trivial group and mixed orders.
std::optional<int> is_p_group(const FiniteGroup& g);

/// (p, n) with g isomorphic to (Z_p)^n, absent otherwise.
std::optional<std::pair<int, int>> is_elementary_abelian(const FiniteGroup& g);

/// Minimal generating set size of an abelian group via p-torsion counting:
/// max over primes p | |g| of log_p |{x : x^p = e}|. Throws NotAbelian.
int abelian_rank(const FiniteGroup& g);

}  // namespace cgroups
