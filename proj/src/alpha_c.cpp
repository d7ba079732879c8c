#include "cgroups/alpha_c.hpp"

#include <numeric>
#include <sstream>

namespace cgroups {

bool AlphaCParams::valid() const {
    if (n1 < 2 || n2 < 1 || n3 < 1) return false;
    if (n2 % n1 != 0 || n3 % n1 != 0) return false;
    return std::gcd(n1, std::gcd(n2 / n1, n3 / n1)) > 1;
}

void AlphaCParams::check() const {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw InvalidAlphaCParams(str() + ": parameters must be positive");
    if (n2 % n1 != 0) throw InvalidAlphaCParams(str() + ": n1 does not divide n2");
    if (n3 % n1 != 0) throw InvalidAlphaCParams(str() + ": n1 does not divide n3");
    if (std::gcd(n1, std::gcd(n2 / n1, n3 / n1)) <= 1)
        throw InvalidAlphaCParams(str() + ": gcd(n1, n2/n1, n3/n1) = 1");
}

std::string AlphaCParams::str() const {
    std::ostringstream os;
    os << "(" << n1 << "," << n2 << "," << n3 << ")";
    return os.str();
}

AlphaCElement alpha_c_mul(const AlphaCParams& p, AlphaCElement a, AlphaCElement b) {
    return {(a.x + b.x + b.y * a.z) % p.n1, (a.y + b.y) % p.n2, (a.z + b.z) % p.n3};
}

AlphaCElement alpha_c_inverse(const AlphaCParams& p, AlphaCElement g) {
    return {((p.n1 - g.x) + g.y * g.z) % p.n1, (p.n2 - g.y) % p.n2, (p.n3 - g.z) % p.n3};
}

AlphaCElement alpha_c_commutator(const AlphaCParams& p, AlphaCElement u, AlphaCElement v) {
    long x = static_cast<long>(v.y) * u.z + static_cast<long>(p.n2 - 1) * u.y * v.z;
    return {static_cast<int>(x % p.n1), 0, 0};
}

int alpha_c_encode(const AlphaCParams& p, AlphaCElement g) {
    return g.x + p.n1 * (g.y + p.n2 * g.z);
}

AlphaCElement alpha_c_decode(const AlphaCParams& p, int index) {
    AlphaCElement g;
    g.x = index % p.n1;
    index /= p.n1;
    g.y = index % p.n2;
    g.z = index / p.n2;
    return g;
}

std::array<int, 5> alpha_c_canonical_decompose(const AlphaCParams& p, AlphaCElement g) {
    // The word multiplies out to ((n1 - k3) mod n1, k1*n1 + k4, k2*n1 + k5),
    // so the exponents read off the coordinates directly.
    return {g.y / p.n1, g.z / p.n1, (p.n1 - g.x) % p.n1, g.y % p.n1, g.z % p.n1};
}

AlphaCElement alpha_c_canonical_compose(const AlphaCParams& p, const std::array<int, 5>& k) {
    const AlphaCElement a{0, 1, 0}, b{0, 0, 1};
    const AlphaCElement c = alpha_c_commutator(p, a, b);
    auto pow = [&](AlphaCElement e, int m) {
        AlphaCElement acc{0, 0, 0};
        for (int i = 0; i < m; ++i) acc = alpha_c_mul(p, acc, e);
        return acc;
    };
    AlphaCElement w = pow(a, k[0] * p.n1);
    w = alpha_c_mul(p, w, pow(b, k[1] * p.n1));
    w = alpha_c_mul(p, w, pow(c, k[2]));
    w = alpha_c_mul(p, w, pow(a, k[3]));
    w = alpha_c_mul(p, w, pow(b, k[4]));
    return w;
}

FiniteGroup alpha_c(const AlphaCParams& p, const Limits& lim) {
    p.check();
    const long n = p.order();
    if (n > lim.order_cap) throw OrderCapExceeded("alpha_c" + p.str() + " order exceeds cap");
    const int order = static_cast<int>(n);
    std::vector<int> flat(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels(order);
    std::vector<AlphaCElement> elems(order);
    for (int i = 0; i < order; ++i) {
        elems[i] = alpha_c_decode(p, i);
        std::ostringstream os;
        os << "(" << elems[i].x << "," << elems[i].y << "," << elems[i].z << ")";
        labels[i] = os.str();
    }
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            flat[static_cast<std::size_t>(i) * order + j] =
                alpha_c_encode(p, alpha_c_mul(p, elems[i], elems[j]));
    return FiniteGroup::from_parts(order, std::move(flat),
                                   Provenance{"alpha-c", p.str(), true, 0},
                                   std::move(labels), lim);
}

}  // namespace cgroups
