#include "cgroups/isomorphism.hpp"

#include <algorithm>

#include "cgroups/rank.hpp"
#include "cgroups/series.hpp"
#include "cgroups/subgroup.hpp"

namespace cgroups {

std::string Fingerprint::describe_mismatch(const Fingerprint& o) const {
    if (order != o.order) return "order";
    if (element_orders != o.element_orders) return "element-order multiset";
    if (center_order != o.center_order) return "center order";
    if (derived_order != o.derived_order) return "commutator subgroup order";
    if (nilpotency_class != o.nilpotency_class) return "nilpotency class";
    if (derived_length != o.derived_length) return "derived length";
    return "";
}

Fingerprint invariant_fingerprint(const FiniteGroup& g, const Limits& lim) {
    Fingerprint f;
    f.order = g.order();
    f.element_orders.reserve(g.order());
    for (int i = 0; i < g.order(); ++i) f.element_orders.push_back(g.element_order(i));
    std::sort(f.element_orders.begin(), f.element_orders.end());
    f.center_order = center(g).order();
    f.derived_order = commutator_subgroup(g).order();
    f.nilpotency_class = nilpotency_class(g, lim).value_or(-1);
    SeriesReport d = derived_series(g);
    f.derived_length = d.terminated ? d.length : -1;
    return f;
}

namespace {

struct Backtracker {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<int> gens;                        // generators of g
    std::vector<std::vector<int>> candidates;     // per generator, ascending
    std::vector<int> images;
    int n;

    // Extends the generator images to a full map by walking the Cayley
    // graph of g; returns the map, or empty on an edge conflict.
    std::vector<int> extend() const {
        std::vector<int> map(n, -1);
        std::vector<int> bfs;
        map[g.identity()] = h.identity();
        bfs.push_back(g.identity());
        for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
            const int x = bfs[qi];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const int y = g.mul(x, gens[i]);
                const int ym = h.mul(map[x], images[i]);
                if (map[y] < 0) {
                    map[y] = ym;
                    bfs.push_back(y);
                } else if (map[y] != ym) {
                    return {};
                }
            }
        }
        // Bijectivity; gens generate g so the map is total.
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            if (map[x] < 0 || hit[map[x]]) return {};
            hit[map[x]] = 1;
        }
        return map;
    }

    bool search(std::size_t level, std::vector<int>& out) {
        if (level == gens.size()) {
            std::vector<int> map = extend();
            if (map.empty()) return false;
            out = std::move(map);
            return true;
        }
        for (int cand : candidates[level]) {
            images[level] = cand;
            if (search(level + 1, out)) return true;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& lim) {
    if (g.order() != h.order())
        throw OrderMismatch("orders differ: " + std::to_string(g.order()) + " vs " +
                            std::to_string(h.order()));
    if (g.order() > lim.iso_cap)
        throw OrderCapExceeded("order " + std::to_string(g.order()) +
                               " exceeds isomorphism cap " + std::to_string(lim.iso_cap));

    Fingerprint fg = invariant_fingerprint(g, lim);
    Fingerprint fh = invariant_fingerprint(h, lim);
    if (!(fg == fh)) return {false, std::nullopt, fg.describe_mismatch(fh)};

    Backtracker bt{g, h, {}, {}, {}, g.order()};
    bt.gens = rank(g, lim).witness;
    if (bt.gens.empty()) {
        // trivial group
        std::vector<int> map{h.identity()};
        return {true, map, ""};
    }
    Subgroup zg = center(g);
    Subgroup zh = center(h);
    bt.candidates.resize(bt.gens.size());
    for (std::size_t i = 0; i < bt.gens.size(); ++i) {
        const int ord = g.element_order(bt.gens[i]);
        const bool central = zg.contains(bt.gens[i]);
        for (int c = 0; c < h.order(); ++c)
            if (h.element_order(c) == ord && zh.contains(c) == central)
                bt.candidates[i].push_back(c);
    }
    bt.images.assign(bt.gens.size(), -1);
    std::vector<int> witness;
    if (!bt.search(0, witness)) return {false, std::nullopt, ""};

    // Exhaustive homomorphism check on the returned witness.
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            if (witness[g.mul(x, y)] != h.mul(witness[x], witness[y]))
                throw VerificationFailure("isomorphism witness fails homomorphism check");
    return {true, witness, ""};
}

}  // namespace cgroups
