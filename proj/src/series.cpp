#include "cgroups/series.hpp"

#include <string>

namespace cgroups {

SeriesReport upper_central_series(const FiniteGroup& g, const Limits& lim) {
    SeriesReport r{SeriesKind::UpperCentral, {}, false, 0};
    const int n = g.order();
    if (n == 1) {
        r.terminated = true;  // class 0 by convention
        return r;
    }
    Subgroup z = center(g);
    r.subgroup_orders.push_back(z.order());
    while (z.order() < n) {
        QuotientResult q = quotient(g, z, lim);
        Subgroup zq = center(q.group);
        std::vector<int> next;
        for (int x = 0; x < n; ++x)
            if (zq.in[q.projection[x]]) next.push_back(x);
        if (static_cast<int>(next.size()) == z.order()) {
            // stabilized below G: not nilpotent
            r.length = static_cast<int>(r.subgroup_orders.size());
            return r;
        }
        z = Subgroup::of(g, std::move(next));
        r.subgroup_orders.push_back(z.order());
    }
    r.terminated = true;
    r.length = static_cast<int>(r.subgroup_orders.size());
    return r;
}

SeriesReport derived_series(const FiniteGroup& g) {
    SeriesReport r{SeriesKind::Derived, {}, false, 0};
    Subgroup d = commutator_subgroup(g);
    r.subgroup_orders.push_back(d.order());
    while (d.order() > 1) {
        Subgroup next = derived_subgroup_of(g, d);
        if (next.order() == d.order()) {
            r.length = static_cast<int>(r.subgroup_orders.size());
            return r;  // perfect tail, not solvable
        }
        d = std::move(next);
        r.subgroup_orders.push_back(d.order());
    }
    r.terminated = true;
    r.length = static_cast<int>(r.subgroup_orders.size());
    return r;
}

std::optional<int> nilpotency_class(const FiniteGroup& g, const Limits& lim) {
    SeriesReport r = upper_central_series(g, lim);
    if (!r.terminated) return std::nullopt;
    return r.length;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).terminated; }

std::optional<int> is_p_group(const FiniteGroup& g) {
    int n = g.order();
    if (n < 2) return std::nullopt;
    int p = 0;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    if (p == 0) p = n;
    while (n % p == 0) n /= p;
    if (n != 1) return std::nullopt;
    return p;
}

std::optional<std::pair<int, int>> is_elementary_abelian(const FiniteGroup& g) {
    auto p = is_p_group(g);
    if (!p || !g.is_abelian()) return std::nullopt;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        if (g.element_order(x) != *p) return std::nullopt;
    }
    int n = g.order(), k = 0;
    while (n > 1) { n /= *p; ++k; }
    return std::make_pair(*p, k);
}

int abelian_rank(const FiniteGroup& g) {
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.mul(i, j) != g.mul(j, i))
                throw NotAbelian("elements " + std::to_string(i) + " and " +
                                 std::to_string(j) + " do not commute");
    if (n == 1) return 0;
    int rank = 0;
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        // p-torsion subgroup has order p^d where d = p-rank.
        int count = 0;
        for (int x = 0; x < n; ++x)
            if (g.power(x, p) == g.identity()) ++count;
        int d = 0;
        while (count > 1) { count /= p; ++d; }
        rank = std::max(rank, d);
    }
    return rank;
}

}  // namespace cgroups
