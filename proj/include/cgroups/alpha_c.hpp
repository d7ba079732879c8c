#pragma once

#include <array>
#include <string>

#include "cgroups/finite_group.hpp"

namespace cgroups {

/// Parameter triple for the twisted-product construction. Valid when
/// n1 | n2, n1 | n3 and gcd(n1, n2/n1, n3/n1) > 1 (which forces n1 >= 2).
struct AlphaCParams {
    int n1 = 0;
    int n2 = 0;
    int n3 = 0;

    bool valid() const;
    /// Throws InvalidAlphaCParams naming the violated condition.
    void check() const;
    long order() const { return static_cast<long>(n1) * n2 * n3; }
    std::string str() const;
    bool operator==(const AlphaCParams&) const = default;
};

struct AlphaCElement {
    int x = 0;  // residue mod n1
    int y = 0;  // residue mod n2
    int z = 0;  // residue mod n3
    bool operator==(const AlphaCElement&) const = default;
};

/// (x1,y1,z1)·(x2,y2,z2) = (x1+x2+y2*z1 mod n1, y1+y2 mod n2, z1+z2 mod n3)
AlphaCElement alpha_c_mul(const AlphaCParams& p, AlphaCElement a, AlphaCElement b);

/// ((n1-x)+y*z mod n1, n2-y mod n2, n3-z mod n3)
AlphaCElement alpha_c_inverse(const AlphaCParams& p, AlphaCElement g);

/// Closed form (v.y*u.z + (n2-1)*u.y*v.z mod n1, 0, 0); equals the
/// table commutator u v u^-1 v^-1.
AlphaCElement alpha_c_commutator(const AlphaCParams& p, AlphaCElement u, AlphaCElement v);

/// Element index = x + n1*y + n1*n2*z.
int alpha_c_encode(const AlphaCParams& p, AlphaCElement g);
AlphaCElement alpha_c_decode(const AlphaCParams& p, int index);

/// Exponents (k1,k2,k3,k4,k5) of the canonical word
/// a^(k1*n1) b^(k2*n1) [a,b]^k3 a^k4 b^k5 with a=(0,1,0), b=(0,0,1),
/// over the half-open ranges k1 in [0,n2/n1), k2 in [0,n3/n1),
/// k3,k4,k5 in [0,n1). The map is a bijection onto those ranges.
std::array<int, 5> alpha_c_canonical_decompose(const AlphaCParams& p, AlphaCElement g);

/// Multiplies the canonical word back out.
AlphaCElement alpha_c_canonical_compose(const AlphaCParams& p, const std::array<int, 5>& k);

/// Builds the full multiplication table. Elements are labeled "(x,y,z)".
FiniteGroup alpha_c(const AlphaCParams& p, const Limits& lim = {});

}  // namespace cgroups
