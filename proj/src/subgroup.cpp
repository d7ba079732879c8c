#include "cgroups/subgroup.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cgroups {

namespace {

struct ElementSet {
    std::vector<int> elems;
    std::vector<char> in;

    explicit ElementSet(int n) : in(static_cast<std::size_t>(n), 0) {}
    void add(int x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    }
};

// Saturates s under the group operation. With stop_over > 0, aborts and
// returns false as soon as the set grows past stop_over elements.
bool saturate(const FiniteGroup& g, ElementSet& s, int stop_over) {
    for (std::size_t qi = 0; qi < s.elems.size(); ++qi) {
        const int x = s.elems[qi];
        for (std::size_t yi = 0; yi < s.elems.size(); ++yi) {
            const int y = s.elems[yi];
            s.add(g.mul(x, y));
            s.add(g.mul(y, x));
            if (stop_over > 0 && static_cast<int>(s.elems.size()) > stop_over) return false;
        }
    }
    return true;
}

int largest_proper_divisor(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return n / p;
    return 1;  // n prime (or 1)
}

}  // namespace

Subgroup Subgroup::of(const FiniteGroup& g, std::vector<int> sorted_members) {
    Subgroup s;
    s.parent = &g;
    s.members = std::move(sorted_members);
    s.in.assign(static_cast<std::size_t>(g.order()), 0);
    for (int x : s.members) s.in[x] = 1;
    return s;
}

bool Subgroup::subset_of(const Subgroup& o) const {
    for (int x : members)
        if (!o.in[x]) return false;
    return true;
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& seed) {
    ElementSet s(g.order());
    s.add(g.identity());
    for (int x : seed) s.add(x);
    saturate(g, s, 0);
    std::sort(s.elems.begin(), s.elems.end());
    return Subgroup::of(g, std::move(s.elems));
}

bool generates(const FiniteGroup& g, const std::vector<int>& seed) {
    const int n = g.order();
    ElementSet s(n);
    s.add(g.identity());
    for (int x : seed) s.add(x);
    if (!saturate(g, s, n == 1 ? 0 : largest_proper_divisor(n))) return true;
    return static_cast<int>(s.elems.size()) == n;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> z;
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int j = 0; j < n; ++j) {
            if (g.mul(i, j) != g.mul(j, i)) { central = false; break; }
        }
        if (central) z.push_back(i);
    }
    return Subgroup::of(g, std::move(z));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
    ElementSet comms(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) comms.add(g.commutator(i, j));
    return closure(g, comms.elems);
}

Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h) {
    ElementSet comms(g.order());
    for (int a : h.members)
        for (int b : h.members) comms.add(g.commutator(a, b));
    return closure(g, comms.elems);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& lim) {
    const int n = g.order();
    if (n > lim.subgroup_enum_cap)
        throw OrderCapExceeded("subgroup enumeration: order " + std::to_string(n) +
                               " exceeds cap " + std::to_string(lim.subgroup_enum_cap));
    const int lpd = largest_proper_divisor(n);

    std::set<std::vector<int>> seen;
    std::vector<Subgroup> subs;
    auto insert = [&](std::vector<int> members) -> bool {
        if (!seen.insert(members).second) return false;
        subs.push_back(Subgroup::of(g, std::move(members)));
        return true;
    };

    insert({g.identity()});
    std::vector<int> whole(n);
    for (int i = 0; i < n; ++i) whole[i] = i;
    insert(whole);

    for (int x = 0; x < n; ++x) {
        Subgroup c = closure(g, {x});
        insert(c.members);
    }

    // Close unions of pairs until fixpoint. Every subgroup is paired with
    // every earlier one exactly once; unions past the largest proper divisor
    // are the whole group by Lagrange and are skipped.
    for (std::size_t u = 0; u < subs.size(); ++u) {
        for (std::size_t v = 0; v < u; ++v) {
            const Subgroup& a = subs[u];
            const Subgroup& b = subs[v];
            if (a.order() == n || b.order() == n) continue;
            if (a.subset_of(b) || b.subset_of(a)) continue;
            ElementSet s(n);
            for (int m : a.members) s.add(m);
            for (int m : b.members) s.add(m);
            if (!saturate(g, s, lpd)) continue;  // whole group, already present
            if (static_cast<int>(s.elems.size()) == n) continue;
            std::sort(s.elems.begin(), s.elems.end());
            insert(std::move(s.elems));
        }
    }

    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return subs;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, const Limits& lim) {
    std::vector<Subgroup> subs = all_subgroups(g, lim);
    const int n = g.order();
    std::vector<Subgroup> proper;
    for (auto& s : subs)
        if (s.order() < n) proper.push_back(std::move(s));
    std::vector<Subgroup> maximal;
    for (const auto& m : proper) {
        bool contained = false;
        for (const auto& other : proper) {
            if (other.order() > m.order() && m.subset_of(other)) { contained = true; break; }
        }
        if (!contained) maximal.push_back(m);
    }
    return maximal;
}

namespace {

bool prime_power(int n, int* p_out) {
    if (n < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    if (p == 0) p = n;
    while (n % p == 0) n /= p;
    if (n != 1) return false;
    if (p_out) *p_out = p;
    return true;
}

}  // namespace

Subgroup frattini(const FiniteGroup& g, const Limits& lim) {
    const int n = g.order();
    if (n == 1) return Subgroup::of(g, {g.identity()});
    int p = 0;
    if (prime_power(n, &p)) {
        // Burnside route: Phi(G) = <g^p, commutators>.
        ElementSet seeds(n);
        for (int x = 0; x < n; ++x) seeds.add(g.power(x, p));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) seeds.add(g.commutator(i, j));
        return closure(g, seeds.elems);
    }
    return frattini_via_maximals(g, lim);
}

Subgroup frattini_via_maximals(const FiniteGroup& g, const Limits& lim) {
    const int n = g.order();
    if (n == 1) return Subgroup::of(g, {g.identity()});
    std::vector<Subgroup> maximal = maximal_subgroups(g, lim);
    if (maximal.empty()) {
        std::vector<int> whole(n);
        for (int i = 0; i < n; ++i) whole[i] = i;
        return Subgroup::of(g, std::move(whole));
    }
    Subgroup acc = maximal.front();
    for (std::size_t i = 1; i < maximal.size(); ++i) acc = intersect(acc, maximal[i]);
    return acc;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> out;
    for (int x : a.members)
        if (b.in[x]) out.push_back(x);
    return Subgroup::of(*a.parent, std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h, int* witness) {
    for (int x = 0; x < g.order(); ++x) {
        const int xinv = g.inverse(x);
        for (int m : h.members) {
            if (!h.in[g.mul(g.mul(x, m), xinv)]) {
                if (witness) *witness = x;
                return false;
            }
        }
    }
    return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const Limits& lim) {
    const int m = h.order();
    std::vector<int> index_of(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < m; ++i) index_of[h.members[i]] = i;
    std::vector<int> flat(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            flat[static_cast<std::size_t>(i) * m + j] =
                index_of[g.mul(h.members[i], h.members[j])];
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.reserve(m);
        for (int x : h.members) labels.push_back(g.labels()[x]);
    }
    return FiniteGroup::from_parts(
        m, std::move(flat),
        Provenance{"table", "subgroup of " + g.provenance().tag + "(" +
                       g.provenance().detail + ")", true, 0},
        std::move(labels), lim);
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& h, const Limits& lim) {
    int witness = -1;
    if (!is_normal(g, h, &witness))
        throw NotNormal("subgroup is not normal; conjugation by element " +
                        std::to_string(witness) + " escapes it");
    const int n = g.order();
    std::vector<int> proj(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;  // minimal member of each coset, in coset order
    for (int x = 0; x < n; ++x) {
        if (proj[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : h.members) proj[g.mul(x, m)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> flat(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            flat[static_cast<std::size_t>(i) * q + j] = proj[g.mul(reps[i], reps[j])];
    FiniteGroup qg = FiniteGroup::from_parts(
        q, std::move(flat),
        Provenance{"quotient", g.provenance().tag + "(" + g.provenance().detail +
                       ") / H of order " + std::to_string(h.order()), true, 0},
        {}, lim);
    return {std::move(qg), std::move(proj)};
}

}  // namespace cgroups
