#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgroups/errors.hpp"

namespace cgroups {

/// Resource caps shared by the constructors and search routines.
struct Limits {
    int order_cap = 4096;            // largest table we will allocate
    int assoc_exhaustive_cap = 512;  // exhaustive associativity check up to here
    int subgroup_enum_cap = 256;     // full subgroup-lattice enumeration cap
    int iso_cap = 256;               // isomorphism backtracking cap
    int rank_k_cap = 6;              // largest generating-set size searched
    int certify_cap = 128;           // exhaustive (k-1)-level rank certificates up to here
    int max_cosets = 65536;          // coset enumeration live-coset cap
    std::uint64_t seed = 0xC0FFEE;   // drives every sampled check
};

struct Provenance {
    std::string tag;     // table | cyclic | abelian-product | alpha-c |
                         // direct-product | quotient | coset-enumeration
    std::string detail;  // constructor parameters, human readable
    bool assoc_exhaustive = true;
    long assoc_samples = 0;  // random triples checked when not exhaustive
};

/// A finite group as a dense multiplication table over element indices
/// 0..n-1. Immutable after construction; all operations are pure.
class FiniteGroup {
public:
    /// Validates the group axioms and locates the identity. Associativity is
    /// checked exhaustively for n <= lim.assoc_exhaustive_cap and on
    /// 10*n^2 seeded random triples above that (recorded in provenance).
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  const Limits& lim = {});

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const;
    int power(int a, long k) const;  // k may be negative
    bool is_abelian() const;
    /// xyx^-1y^-1
    int commutator(int x, int y) const {
        return mul(mul(mul(x, y), inverse(x)), inverse(y));
    }

    const Provenance& provenance() const { return prov_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& flat_table() const { return table_; }
    std::vector<std::vector<int>> rows() const;

    /// Trusted constructor for builders whose output is a group by
    /// construction; still runs the full validator so every constructor
    /// output honors the type invariants.
    static FiniteGroup from_parts(int n, std::vector<int> flat, Provenance prov,
                                  std::vector<std::string> labels, const Limits& lim);

private:
    FiniteGroup() = default;

    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;  // row-major, n*n
    std::vector<int> inverse_;
    Provenance prov_;
    std::vector<std::string> labels_;  // empty when unlabeled

    void validate(const Limits& lim);
};

FiniteGroup cyclic(int n, const Limits& lim = {});
FiniteGroup abelian_product(const std::vector<int>& ns, const Limits& lim = {});
FiniteGroup dihedral(int n, const Limits& lim = {});  // order 2n, n >= 1
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const Limits& lim = {});

}  // namespace cgroups
