#pragma once

#include <string>
#include <vector>

#include "cgroups/finite_group.hpp"

namespace cgroups {

enum class RankMethod { Abelian, Burnside, BruteForce };

std::string to_string(RankMethod m);

struct RankResult {
    int rank = 0;
    std::vector<int> witness;  // closure(witness) = G
    RankMethod method = RankMethod::Abelian;
    std::string certificate;  // how minimality was established
};

/// Exact minimal generating set size. Trivial group: 0. Abelian groups via
/// p-torsion rank with a structure-derived witness. p-groups via Burnside's
/// Basis Theorem: rk(G) = log_p |G / Phi(G)|. Everything else by
/// increasing-k subset search; throws SearchCapExceeded past lim.rank_k_cap.
RankResult rank(const FiniteGroup& g, const Limits& lim = {});

/// rank() applied to the center materialized as a standalone group.
RankResult rank_of_center(const FiniteGroup& g, const Limits& lim = {});

/// Independent oracle: pure increasing-k subset search with no shortcuts.
/// Used by the test suites to cross-check the fast paths.
RankResult brute_force_rank(const FiniteGroup& g, const Limits& lim = {});

}  // namespace cgroups
