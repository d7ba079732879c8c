#include "cgroups/rank.hpp"

#include <algorithm>

#include "cgroups/series.hpp"
#include "cgroups/subgroup.hpp"

namespace cgroups {

std::string to_string(RankMethod m) {
    switch (m) {
        case RankMethod::Abelian: return "abelian";
        case RankMethod::Burnside: return "burnside";
        case RankMethod::BruteForce: return "brute-force";
    }
    return "?";
}

namespace {

// Depth-first search over k-subsets in the given candidate order, pruned by
// skipping candidates already inside the closure of the chosen prefix.
bool search_k(const FiniteGroup& g, const std::vector<int>& candidates, int k,
              std::size_t start, Subgroup& prefix_closure, std::vector<int>& chosen) {
    if (k == 0) return prefix_closure.order() == g.order();
    for (std::size_t i = start; i + k <= candidates.size() + 0u; ++i) {
        const int x = candidates[i];
        if (prefix_closure.contains(x)) continue;
        std::vector<int> seed = chosen;
        seed.push_back(x);
        Subgroup next = closure(g, seed);
        chosen.push_back(x);
        Subgroup saved = std::move(prefix_closure);
        prefix_closure = std::move(next);
        if (search_k(g, candidates, k - 1, i + 1, prefix_closure, chosen)) return true;
        prefix_closure = std::move(saved);
        chosen.pop_back();
    }
    return false;
}

RankResult subset_search(const FiniteGroup& g, const Limits& lim) {
    const int n = g.order();
    RankResult r;
    r.method = RankMethod::BruteForce;
    if (n == 1) {
        r.certificate = "trivial";
        return r;
    }
    // High-order elements first; ties broken by index for determinism.
    std::vector<int> candidates(n);
    for (int i = 0; i < n; ++i) candidates[i] = i;
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = g.element_order(i);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return ord[a] > ord[b]; });
    for (int k = 1; k <= lim.rank_k_cap; ++k) {
        Subgroup trivial = closure(g, {});
        std::vector<int> chosen;
        if (search_k(g, candidates, k, 0, trivial, chosen)) {
            r.rank = k;
            r.witness = chosen;
            r.certificate = "exhaustive";
            return r;
        }
    }
    throw SearchCapExceeded("no generating set of size <= " +
                            std::to_string(lim.rank_k_cap) + " found");
}

// Minimal generating set of an abelian group: peel off a maximal-order
// element (always a direct factor), recurse on the quotient, lift back.
std::vector<int> abelian_witness(const FiniteGroup& g, const Limits& lim) {
    std::vector<int> witness;
    // rep_in_orig[i] = element of the original group mapping to element i of
    // the current quotient.
    const FiniteGroup* orig = &g;
    FiniteGroup current = g;  // value copy; groups are small here
    std::vector<int> rep_in_orig(g.order());
    for (int i = 0; i < g.order(); ++i) rep_in_orig[i] = i;
    while (current.order() > 1) {
        int best = 0, best_ord = 0;
        for (int x = 0; x < current.order(); ++x) {
            int o = current.element_order(x);
            if (o > best_ord) { best_ord = o; best = x; }
        }
        witness.push_back(rep_in_orig[best]);
        if (best_ord == current.order()) break;  // cyclic tail
        Subgroup cyc = closure(current, {best});
        QuotientResult q = quotient(current, cyc, lim);
        std::vector<int> next_rep(q.group.order(), -1);
        for (int x = 0; x < current.order(); ++x) {
            int c = q.projection[x];
            if (next_rep[c] < 0) next_rep[c] = rep_in_orig[x];
        }
        current = std::move(q.group);
        rep_in_orig = std::move(next_rep);
    }
    (void)orig;
    std::sort(witness.begin(), witness.end());
    return witness;
}

int int_log(int base, int value) {
    int k = 0;
    while (value > 1) {
        value /= base;
        ++k;
    }
    return k;
}

}  // namespace

RankResult rank(const FiniteGroup& g, const Limits& lim) {
    const int n = g.order();
    RankResult r;
    if (n == 1) {
        r.rank = 0;
        r.method = RankMethod::Abelian;
        r.certificate = "trivial";
        return r;
    }
    if (g.is_abelian()) {
        r.rank = abelian_rank(g);
        r.witness = abelian_witness(g, lim);
        r.method = RankMethod::Abelian;
        r.certificate = "p-torsion count";
        if (static_cast<int>(r.witness.size()) != r.rank)
            throw VerificationFailure("abelian witness size disagrees with p-torsion rank");
        return r;
    }
    if (auto p = is_p_group(g)) {
        Subgroup phi = frattini(g, lim);
        r.rank = int_log(*p, n / phi.order());
        r.method = RankMethod::Burnside;
        r.certificate = "burnside basis theorem";
        // Greedy lift of a basis of G/Phi(G): each pick leaves the span of
        // the previous picks together with Phi.
        std::vector<int> chosen;
        Subgroup span = closure(g, phi.members);
        while (span.order() < n) {
            int pick = -1;
            for (int x = 0; x < n; ++x)
                if (!span.contains(x)) { pick = x; break; }
            chosen.push_back(pick);
            std::vector<int> seed = phi.members;
            seed.insert(seed.end(), chosen.begin(), chosen.end());
            span = closure(g, seed);
        }
        r.witness = chosen;
        if (static_cast<int>(r.witness.size()) != r.rank)
            throw VerificationFailure("burnside witness size disagrees with quotient rank");
        if (!generates(g, r.witness))
            throw VerificationFailure("burnside witness does not generate");
        return r;
    }
    return subset_search(g, lim);
}

RankResult rank_of_center(const FiniteGroup& g, const Limits& lim) {
    Subgroup z = center(g);
    FiniteGroup zg = subgroup_as_group(g, z, lim);
    return rank(zg, lim);
}

RankResult brute_force_rank(const FiniteGroup& g, const Limits& lim) {
    return subset_search(g, lim);
}

}  // namespace cgroups
