#include "cgroups/cgroup_search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cgroups/isomorphism.hpp"
#include "cgroups/presentation.hpp"
#include "cgroups/rank.hpp"
#include "cgroups/series.hpp"
#include "cgroups/subgroup.hpp"
#include "cgroups/todd_coxeter.hpp"

namespace cgroups {

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::add(const std::string& name, bool passed, const std::string& detail) {
    checks.push_back({name, passed, detail});
}

bool is_c_group(const FiniteGroup& g, const Limits& lim) {
    return rank(g, lim).rank < rank_of_center(g, lim).rank;
}

InvariantReport analyze(const std::string& group_id, const FiniteGroup& g, const Limits& lim) {
    const auto t0 = std::chrono::steady_clock::now();
    InvariantReport r;
    r.group_id = group_id;
    r.order = g.order();
    RankResult rk = rank(g, lim);
    r.rank = rk.rank;
    r.rank_method = to_string(rk.method);
    r.rank_witness = rk.witness;
    Subgroup z = center(g);
    r.center_order = z.order();
    RankResult zrk = rank(subgroup_as_group(g, z, lim), lim);
    r.center_rank = zrk.rank;
    r.is_c_group = r.rank < r.center_rank;
    r.nilpotency_class = nilpotency_class(g, lim);
    r.solvable = is_solvable(g);
    r.p_group = is_p_group(g);
    r.provenance = g.provenance().tag +
                   (g.provenance().detail.empty() ? "" : " " + g.provenance().detail);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

std::vector<AlphaCParams> enumerate_alpha_c(const AlphaCFamilyQuery& q) {
    std::vector<AlphaCParams> out;
    for (int n1 = 2; static_cast<long>(n1) * n1 * n1 <= q.max_order; ++n1) {
        for (int n2 = n1; static_cast<long>(n1) * n2 * n1 <= q.max_order; n2 += n1) {
            for (int n3 = n1; static_cast<long>(n1) * n2 * n3 <= q.max_order; n3 += n1) {
                AlphaCParams p{n1, n2, n3};
                if (!p.valid()) continue;
                if (q.p_power_only || !q.primes.empty()) {
                    long n = p.order();
                    int prime = 0;
                    for (int d = 2; static_cast<long>(d) * d <= n; ++d)
                        if (n % d == 0) { prime = d; break; }
                    if (prime == 0) prime = static_cast<int>(n);
                    long rest = n;
                    while (rest % prime == 0) rest /= prime;
                    if (rest != 1) continue;
                    if (!q.primes.empty() &&
                        std::find(q.primes.begin(), q.primes.end(), prime) == q.primes.end())
                        continue;
                }
                out.push_back(p);
            }
        }
    }
    return out;
}

VerifyReport verify_alpha_c(const AlphaCParams& params, const Limits& lim) {
    params.check();
    VerifyReport rep;
    const std::string tag = "alphaC" + params.str();
    FiniteGroup g = alpha_c(params, lim);
    const int n = g.order();
    rep.add(tag + ": order", n == params.order());

    const AlphaCElement a{0, 1, 0}, b{0, 0, 1};
    const int ai = alpha_c_encode(params, a), bi = alpha_c_encode(params, b);
    rep.add(tag + ": a,b generate", generates(g, {ai, bi}));

    // Center: {(x, n1*y, n1*z)} of order n1*(n2/n1)*(n3/n1).
    Subgroup z = center(g);
    const int expected_center =
        params.n1 * (params.n2 / params.n1) * (params.n3 / params.n1);
    rep.add(tag + ": center order", z.order() == expected_center,
            "got " + std::to_string(z.order()));
    bool center_shape = true;
    for (int i : z.members) {
        AlphaCElement e = alpha_c_decode(params, i);
        if (e.y % params.n1 != 0 || e.z % params.n1 != 0) { center_shape = false; break; }
    }
    center_shape = center_shape && z.order() == expected_center;
    rep.add(tag + ": center shape (x, n1*y, n1*z)", center_shape);

    // Center structure Z_n1 x Z_{n2/n1} x Z_{n3/n1}.
    {
        FiniteGroup zg = subgroup_as_group(g, z, lim);
        FiniteGroup model =
            abelian_product({params.n1, params.n2 / params.n1, params.n3 / params.n1}, lim);
        bool same;
        if (zg.order() <= lim.iso_cap) {
            same = is_isomorphic(zg, model, lim).isomorphic;
        } else {
            // Abelian groups are determined by their element-order multisets.
            auto orders = [](const FiniteGroup& x) {
                std::vector<int> o(x.order());
                for (int i = 0; i < x.order(); ++i) o[i] = x.element_order(i);
                std::sort(o.begin(), o.end());
                return o;
            };
            same = orders(zg) == orders(model);
        }
        rep.add(tag + ": center structure", same);
    }

    RankResult rk = rank(g, lim);
    rep.add(tag + ": rank 2", rk.rank == 2, "got " + std::to_string(rk.rank));
    RankResult zrk = rank_of_center(g, lim);
    rep.add(tag + ": center rank 3", zrk.rank == 3, "got " + std::to_string(zrk.rank));
    rep.add(tag + ": C-group", rk.rank < zrk.rank);

    auto cls = nilpotency_class(g, lim);
    rep.add(tag + ": nilpotency class 2", cls.has_value() && *cls == 2);
    rep.add(tag + ": solvable", is_solvable(g));

    // Closed-form commutator and inverse against the table.
    bool comm_ok = true, inv_ok = true;
    auto check_pair = [&](int i, int j) {
        AlphaCElement u = alpha_c_decode(params, i), v = alpha_c_decode(params, j);
        return alpha_c_encode(params, alpha_c_commutator(params, u, v)) == g.commutator(i, j);
    };
    if (n <= 256) {
        for (int i = 0; i < n && comm_ok; ++i)
            for (int j = 0; j < n; ++j)
                if (!check_pair(i, j)) { comm_ok = false; break; }
    } else {
        std::mt19937_64 rng(lim.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int s = 0; s < 1000; ++s)
            if (!check_pair(pick(rng), pick(rng))) { comm_ok = false; break; }
    }
    for (int i = 0; i < n; ++i) {
        AlphaCElement e = alpha_c_decode(params, i);
        if (alpha_c_encode(params, alpha_c_inverse(params, e)) != g.inverse(i)) {
            inv_ok = false;
            break;
        }
    }
    rep.add(tag + ": commutator closed form", comm_ok);
    rep.add(tag + ": inverse closed form", inv_ok);

    // Canonical words over half-open ranges hit each element exactly once.
    {
        bool bijective = true;
        std::set<std::array<int, 5>> tuples;
        for (int i = 0; i < n; ++i) {
            AlphaCElement e = alpha_c_decode(params, i);
            std::array<int, 5> k = alpha_c_canonical_decompose(params, e);
            if (k[0] < 0 || k[0] >= params.n2 / params.n1 || k[1] < 0 ||
                k[1] >= params.n3 / params.n1 || k[2] < 0 || k[2] >= params.n1 ||
                k[3] < 0 || k[3] >= params.n1 || k[4] < 0 || k[4] >= params.n1) {
                bijective = false;
                break;
            }
            if (!(alpha_c_canonical_compose(params, k) == e)) { bijective = false; break; }
            tuples.insert(k);
        }
        bijective = bijective && static_cast<int>(tuples.size()) == n;
        rep.add(tag + ": canonical word bijection", bijective);
    }
    return rep;
}

std::string order64_presentation_text() {
    return "<a,b | a^4=b^8=1, a^2b=ba^2, b^2a=ab^-2, (b^-1a)^2=(ab)^2>";
}

std::string p5_presentation_text(int p) {
    const int p2 = p * p;
    std::ostringstream os;
    os << "<a,b | a^" << p2 << ", b^" << p2 << ", [a,b]^" << p
       << ", [a,[a,b]], [b,[a,b]]>";
    return os.str();
}

VerifyReport verify_p5_claim(int p, const Limits& lim) {
    if (p < 2) throw GroupError("p must be a prime >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw GroupError(std::to_string(p) + " is not prime");
    long order = 1;
    for (int i = 0; i < 5; ++i) order *= p;
    if (order > lim.iso_cap)
        throw OrderCapExceeded("order p^5 = " + std::to_string(order) +
                               " exceeds the isomorphism/certification cap");

    const AlphaCParams params{p, p * p, p * p};
    VerifyReport rep = verify_alpha_c(params, lim);
    const std::string tag = "p5(p=" + std::to_string(p) + ")";

    FiniteGroup g = alpha_c(params, lim);
    Subgroup z = center(g);
    Subgroup phi = frattini(g, lim);
    rep.add(tag + ": Phi(G) = Z(G)", phi.members == z.members);

    QuotientResult q = quotient(g, z, lim);
    auto ea = is_elementary_abelian(q.group);
    rep.add(tag + ": G/Z(G) elementary abelian of order p^2",
            q.group.order() == p * p && ea.has_value() && ea->first == p);

    const AlphaCElement a{0, 1, 0}, b{0, 0, 1};
    const int ai = alpha_c_encode(params, a), bi = alpha_c_encode(params, b);
    rep.add(tag + ": |a| = |b| = p^2",
            g.element_order(ai) == p * p && g.element_order(bi) == p * p);
    rep.add(tag + ": |[a,b]| = p", g.element_order(g.commutator(ai, bi)) == p);

    // Positive direction of uniqueness: the proof presentation realizes an
    // isomorphic group.
    EnumerationResult en =
        coset_enumerate(parse_presentation(p5_presentation_text(p)), lim.max_cosets, lim);
    rep.add(tag + ": presentation order p^5",
            static_cast<long>(en.group.order()) == order);
    IsoResult iso = is_isomorphic(g, en.group, lim);
    rep.add(tag + ": presentation isomorphic to the constructed group", iso.isomorphic);
    return rep;
}

VerifyReport verify_multiple_of_p5(int p, int k_max, const Limits& lim) {
    if (k_max < 1) throw GroupError("k_max must be >= 1");
    VerifyReport rep;
    FiniteGroup base = alpha_c({p, p * p, p * p}, lim);
    for (int k = 1; k <= k_max; ++k) {
        FiniteGroup g = direct_product(base, cyclic(k * p, lim), lim);
        const std::string tag =
            "alphaC(" + std::to_string(p) + "," + std::to_string(p * p) + "," +
            std::to_string(p * p) + ")xZ" + std::to_string(k * p);
        RankResult rk = brute_force_rank(g, lim);
        Subgroup z = center(g);
        RankResult zrk = brute_force_rank(subgroup_as_group(g, z, lim), lim);
        rep.add(tag + ": C-group (order " + std::to_string(g.order()) + ")",
                rk.rank < zrk.rank,
                "rk=" + std::to_string(rk.rank) + " rk(Z)=" + std::to_string(zrk.rank));
    }
    return rep;
}

std::vector<std::pair<std::string, FiniteGroup>> build_corpus(const CorpusSpec& spec,
                                                              const Limits& lim) {
    std::vector<std::pair<std::string, FiniteGroup>> corpus;

    for (int n = 1; n <= spec.cyclic_max; ++n)
        corpus.emplace_back("cyclic(" + std::to_string(n) + ")", cyclic(n, lim));

    // Nondecreasing factor tuples, each factor >= 2.
    std::vector<std::vector<int>> tuples;
    std::vector<int> prefix;
    auto gen = [&](auto&& self, int min_factor, long product) -> void {
        if (prefix.size() >= 2) tuples.push_back(prefix);
        if (static_cast<int>(prefix.size()) == spec.abelian_factor_count_max) return;
        for (int f = min_factor; product * f <= spec.abelian_product_max; ++f) {
            prefix.push_back(f);
            self(self, f, product * f);
            prefix.pop_back();
        }
    };
    gen(gen, 2, 1);
    for (const auto& t : tuples) {
        std::ostringstream id;
        id << "abelian(";
        for (std::size_t i = 0; i < t.size(); ++i) id << (i ? "x" : "") << t[i];
        id << ")";
        corpus.emplace_back(id.str(), abelian_product(t, lim));
    }

    for (int n = 3; n <= spec.dihedral_max; ++n)
        corpus.emplace_back("dihedral(" + std::to_string(2 * n) + ")", dihedral(n, lim));

    for (const AlphaCParams& p : enumerate_alpha_c({spec.alpha_c_max, false, {}}))
        corpus.emplace_back("alphaC" + p.str(), alpha_c(p, lim));

    {
        FiniteGroup base = alpha_c({2, 4, 4}, lim);
        for (int k = 1; k <= spec.product_k_max; ++k)
            corpus.emplace_back("alphaC(2,4,4)xZ" + std::to_string(2 * k),
                                direct_product(base, cyclic(2 * k, lim), lim));
    }

    if (spec.include_presentations) {
        corpus.emplace_back(
            "pres(order64)",
            coset_enumerate(parse_presentation(order64_presentation_text()), lim.max_cosets,
                            lim)
                .group);
        corpus.emplace_back(
            "pres(p5-2)",
            coset_enumerate(parse_presentation(p5_presentation_text(2)), lim.max_cosets, lim)
                .group);
    }
    return corpus;
}

std::vector<InvariantReport> analyze_corpus(
    const std::vector<std::pair<std::string, FiniteGroup>>& corpus, const Limits& lim,
    int jobs) {
    std::vector<InvariantReport> out(corpus.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            out[i] = analyze(corpus[i].first, corpus[i].second, lim);
        return out;
    }
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < corpus.size(); i += jobs)
                out[i] = analyze(corpus[i].first, corpus[i].second, lim);
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace cgroups
