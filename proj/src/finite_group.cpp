#include "cgroups/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cgroups {

namespace {

std::string triple(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

}  // namespace

void FiniteGroup::validate(const Limits& lim) {
    const int n = n_;
    if (n <= 0) throw NotAGroup("empty table");
    if (n > lim.order_cap)
        throw OrderCapExceeded("order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(lim.order_cap));

    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        int v = table_[idx];
        if (v < 0 || v >= n)
            throw NotAGroup("entry out of range at (" + std::to_string(idx / n) + "," +
                            std::to_string(idx % n) + ")");
    }

    // Identity: the row equal to 0..n-1 whose column is also the identity map.
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool row_id = true;
        for (int j = 0; j < n; ++j) {
            if (mul(i, j) != j) { row_id = false; break; }
        }
        if (!row_id) continue;
        bool col_id = true;
        for (int j = 0; j < n; ++j) {
            if (mul(j, i) != j) { col_id = false; break; }
        }
        if (col_id) { e = i; break; }
    }
    if (e < 0) throw NotAGroup("no identity element");
    identity_ = e;

    // Latin square: every row and column is a permutation of 0..n-1.
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            int v = mul(i, j);
            if (seen[v])
                throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            int v = mul(i, j);
            if (seen[v])
                throw NotAGroup("column " + std::to_string(j) + " is not a permutation");
            seen[v] = 1;
        }
    }

    // Associativity: exhaustive at small orders, seeded random triples above.
    if (n <= lim.assoc_exhaustive_cap) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int ij = mul(i, j);
                for (int k = 0; k < n; ++k) {
                    if (mul(ij, k) != mul(i, mul(j, k)))
                        throw NotAGroup("associativity fails at " + triple(i, j, k));
                }
            }
        prov_.assoc_exhaustive = true;
        prov_.assoc_samples = 0;
    } else {
        std::mt19937_64 rng(lim.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        const long samples = 10L * n * n;
        for (long s = 0; s < samples; ++s) {
            int i = pick(rng), j = pick(rng), k = pick(rng);
            if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                throw NotAGroup("associativity fails at " + triple(i, j, k));
        }
        prov_.assoc_exhaustive = false;
        prov_.assoc_samples = samples;
    }

    inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (mul(i, j) == e) { inverse_[i] = j; break; }
        }
        if (inverse_[i] < 0) throw NotAGroup("no inverse for " + std::to_string(i));
    }
}

FiniteGroup FiniteGroup::from_parts(int n, std::vector<int> flat, Provenance prov,
                                    std::vector<std::string> labels, const Limits& lim) {
    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(flat);
    g.prov_ = std::move(prov);
    g.labels_ = std::move(labels);
    g.validate(lim);
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    const Limits& lim) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_parts(n, std::move(flat), Provenance{"table", "", true, 0}, {}, lim);
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
    std::vector<std::vector<int>> out(n_);
    for (int i = 0; i < n_; ++i)
        out[i].assign(table_.begin() + static_cast<std::size_t>(i) * n_,
                      table_.begin() + static_cast<std::size_t>(i + 1) * n_);
    return out;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::power(int a, long k) const {
    int base = a;
    if (k < 0) {
        base = inverse(a);
        k = -k;
    }
    int acc = identity_;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

FiniteGroup cyclic(int n, const Limits& lim) {
    if (n < 1) throw GroupError("cyclic: n must be positive");
    if (n > lim.order_cap) throw OrderCapExceeded("cyclic(" + std::to_string(n) + ")");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return FiniteGroup::from_parts(n, std::move(flat),
                                   Provenance{"cyclic", "n=" + std::to_string(n), true, 0},
                                   {}, lim);
}

FiniteGroup abelian_product(const std::vector<int>& ns, const Limits& lim) {
    if (ns.empty()) throw GroupError("abelian_product: empty factor list");
    long n = 1;
    for (int f : ns) {
        if (f < 1) throw GroupError("abelian_product: factors must be positive");
        n *= f;
        if (n > lim.order_cap) throw OrderCapExceeded("abelian product order exceeds cap");
    }
    const int k = static_cast<int>(ns.size());
    const int order = static_cast<int>(n);
    // Mixed-radix encoding, first factor least significant.
    auto decode = [&](int idx, std::vector<int>& t) {
        for (int i = 0; i < k; ++i) {
            t[i] = idx % ns[i];
            idx /= ns[i];
        }
    };
    std::vector<int> flat(static_cast<std::size_t>(order) * order);
    std::vector<int> a(k), b(k);
    for (int i = 0; i < order; ++i) {
        decode(i, a);
        for (int j = 0; j < order; ++j) {
            decode(j, b);
            int idx = 0, radix = 1;
            for (int c = 0; c < k; ++c) {
                idx += ((a[c] + b[c]) % ns[c]) * radix;
                radix *= ns[c];
            }
            flat[static_cast<std::size_t>(i) * order + j] = idx;
        }
    }
    std::ostringstream d;
    for (int i = 0; i < k; ++i) d << (i ? "x" : "") << ns[i];
    return FiniteGroup::from_parts(order, std::move(flat),
                                   Provenance{"abelian-product", d.str(), true, 0}, {}, lim);
}

FiniteGroup dihedral(int n, const Limits& lim) {
    if (n < 1) throw GroupError("dihedral: n must be positive");
    const int order = 2 * n;
    if (order > lim.order_cap) throw OrderCapExceeded("dihedral order exceeds cap");
    // Elements 0..n-1 rotations r^i, n..2n-1 reflections s r^i.
    auto compose = [n](int a, int b) {
        bool fa = a >= n, fb = b >= n;
        int ra = fa ? a - n : a, rb = fb ? b - n : b;
        // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(±ra + rb)
        int r = fb ? ((rb - ra) % n + n) % n : (ra + rb) % n;
        return (fa != fb) ? n + r : r;
    };
    std::vector<int> flat(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            flat[static_cast<std::size_t>(i) * order + j] = compose(i, j);
    return FiniteGroup::from_parts(order, std::move(flat),
                                   Provenance{"table", "dihedral n=" + std::to_string(n), true, 0},
                                   {}, lim);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& lim) {
    const long n = static_cast<long>(g.order()) * h.order();
    if (n > lim.order_cap) throw OrderCapExceeded("direct product order exceeds cap");
    const int order = static_cast<int>(n);
    const int ng = g.order();
    // Index = gi + ng * hi (lexicographic with the left factor fastest).
    std::vector<int> flat(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
        const int gi = i % ng, hi = i / ng;
        for (int j = 0; j < order; ++j) {
            const int gj = j % ng, hj = j / ng;
            flat[static_cast<std::size_t>(i) * order + j] = g.mul(gi, gj) + ng * h.mul(hi, hj);
        }
    }
    Provenance prov{"direct-product",
                    g.provenance().tag + "(" + g.provenance().detail + ") x " +
                        h.provenance().tag + "(" + h.provenance().detail + ")",
                    true, 0};
    return FiniteGroup::from_parts(order, std::move(flat), std::move(prov), {}, lim);
}

}  // namespace cgroups
