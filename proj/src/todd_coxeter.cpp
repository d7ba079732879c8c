#include "cgroups/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cgroups {

namespace {

// Columns: 2g for generator g, 2g+1 for its inverse.
inline int col_of(int signed_gen) {
    return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
}
inline int inv_col(int c) { return c ^ 1; }

class Enumerator {
public:
    Enumerator(const Presentation& p, int max_cosets)
        : ncols_(2 * p.generator_count), max_cosets_(max_cosets) {
        for (const auto& rel : p.relators) {
            std::vector<int> cols;
            cols.reserve(rel.size());
            for (int s : rel) cols.push_back(col_of(s));
            relators_.push_back(std::move(cols));
        }
        new_coset();
    }

    void run() {
        for (int a = 0; a < ncosets(); ++a) {
            if (!live(a)) continue;
            for (const auto& rel : relators_) {
                scan_and_fill(a, rel);
                if (!live(a)) break;
            }
            if (!live(a)) continue;
            for (int c = 0; c < ncols_; ++c)
                if (entry(a, c) < 0) define(a, c);
        }
    }

    int ncosets() const { return static_cast<int>(parent_.size()); }
    bool live(int a) const { return parent_[a] == a; }
    int entry(int a, int c) const { return table_[static_cast<std::size_t>(a) * ncols_ + c]; }
    int live_count() const { return live_; }

    // Live cosets compacted in increasing order; returns the per-column coset
    // action over compacted indices.
    std::vector<std::vector<int>> compact_actions(std::vector<int>& compacted_of) const {
        compacted_of.assign(parent_.size(), -1);
        int m = 0;
        for (int a = 0; a < ncosets(); ++a)
            if (live(a)) compacted_of[a] = m++;
        std::vector<std::vector<int>> act(ncols_, std::vector<int>(m, -1));
        for (int a = 0; a < ncosets(); ++a) {
            if (!live(a)) continue;
            for (int c = 0; c < ncols_; ++c) {
                int t = entry(a, c);
                act[c][compacted_of[a]] = compacted_of[rep_const(t)];
            }
        }
        return act;
    }

    int ncols() const { return ncols_; }

private:
    int ncols_;
    int max_cosets_;
    int live_ = 0;
    std::vector<std::vector<int>> relators_;  // as column sequences
    std::vector<int> table_;                  // ncosets x ncols, -1 undefined
    mutable std::vector<int> parent_;         // union-find, rep is the smallest index
    std::deque<int> queue_;                   // dead cosets awaiting row transfer

    int& slot(int a, int c) { return table_[static_cast<std::size_t>(a) * ncols_ + c]; }

    int new_coset() {
        if (live_ + 1 > max_cosets_)
            throw EnumerationOverflow("live cosets exceed max_cosets = " +
                                      std::to_string(max_cosets_));
        int a = ncosets();
        parent_.push_back(a);
        table_.insert(table_.end(), ncols_, -1);
        ++live_;
        return a;
    }

    int rep(int a) {
        int r = a;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[a] != r) {
            int next = parent_[a];
            parent_[a] = r;
            a = next;
        }
        return r;
    }

    int rep_const(int a) const {
        while (parent_[a] != a) a = parent_[a];
        return a;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep the smaller index live
        parent_[b] = a;
        --live_;
        queue_.push_back(b);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!queue_.empty()) {
            int dead = queue_.front();
            queue_.pop_front();
            for (int c = 0; c < ncols_; ++c) {
                int d = slot(dead, c);
                if (d < 0) continue;
                slot(dead, c) = -1;
                if (slot(d, inv_col(c)) == dead) slot(d, inv_col(c)) = -1;
                int u = rep(dead), v = rep(d);
                if (slot(u, c) >= 0)
                    merge(slot(u, c), v);
                else if (slot(v, inv_col(c)) >= 0)
                    merge(slot(v, inv_col(c)), u);
                else {
                    slot(u, c) = v;
                    slot(v, inv_col(c)) = u;
                }
            }
        }
    }

    int define(int a, int c) {
        int b = new_coset();
        slot(a, c) = b;
        slot(b, inv_col(c)) = a;
        return b;
    }

    void scan_and_fill(int a, const std::vector<int>& w) {
        int f = rep(a), b = rep(a);
        int i = 0, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && entry(f, w[i]) >= 0) f = rep(entry(f, w[i++]));
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv_col(w[j])) >= 0) b = rep(entry(b, inv_col(w[j--])));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                slot(f, w[i]) = b;
                slot(b, inv_col(w[i])) = f;
                return;
            }
            define(f, w[i]);
        }
    }
};

}  // namespace

EnumerationResult coset_enumerate(const Presentation& p, int max_cosets, const Limits& lim) {
    if (max_cosets < 1) throw GroupError("max_cosets must be >= 1");
    if (p.generator_count < 1) throw GroupError("presentation needs at least one generator");
    Enumerator en(p, max_cosets);
    en.run();

    std::vector<int> compacted_of;
    std::vector<std::vector<int>> act = en.compact_actions(compacted_of);
    const int n = en.live_count();
    if (n > lim.order_cap) throw OrderCapExceeded("enumerated group exceeds order cap");

    // The coset of the trivial subgroup is regular: cosets are the elements,
    // coset 0 the identity. Element j first reached from i via generator
    // column c satisfies pi_j = pi_c o pi_i; the Cayley table column for
    // element j is pi_j itself: table[i][j] = pi_j(i).
    std::vector<std::vector<int>> perm(n);
    std::vector<int> bfs;
    perm[0].resize(n);
    for (int i = 0; i < n; ++i) perm[0][i] = i;
    bfs.push_back(0);
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        const int i = bfs[qi];
        for (int gidx = 0; gidx < p.generator_count; ++gidx) {
            const int c = 2 * gidx;
            const int j = act[c][i];
            if (!perm[j].empty()) continue;
            perm[j].resize(n);
            for (int x = 0; x < n; ++x) perm[j][x] = act[c][perm[i][x]];
            bfs.push_back(j);
        }
    }

    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = perm[j][i];

    Provenance prov{"coset-enumeration",
                    std::to_string(p.generator_count) + " generators, " +
                        std::to_string(p.relators.size()) + " relators",
                    true, 0};
    FiniteGroup g = FiniteGroup::from_parts(n, std::move(flat), std::move(prov), {}, lim);

    // Soundness: every relator evaluates to the identity element.
    std::vector<int> gen_elems(p.generator_count);
    for (int gidx = 0; gidx < p.generator_count; ++gidx) gen_elems[gidx] = act[2 * gidx][0];
    for (const auto& rel : p.relators) {
        int e = g.identity();
        for (int s : rel) {
            int ge = gen_elems[s > 0 ? s - 1 : -s - 1];
            e = g.mul(e, s > 0 ? ge : g.inverse(ge));
        }
        if (e != g.identity())
            throw VerificationFailure("relator does not evaluate to the identity");
    }
    return {std::move(g), std::move(gen_elems)};
}

}  // namespace cgroups
