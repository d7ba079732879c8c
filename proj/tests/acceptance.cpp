// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its expected values from first
// principles (closed forms, independent oracles) rather than trusting the
// code path under test.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cgroups/alpha_c.hpp"
#include "cgroups/cgroup_search.hpp"
#include "cgroups/finite_group.hpp"
#include "cgroups/group_io.hpp"
#include "cgroups/isomorphism.hpp"
#include "cgroups/presentation.hpp"
#include "cgroups/rank.hpp"
#include "cgroups/series.hpp"
#include "cgroups/subgroup.hpp"
#include "cgroups/todd_coxeter.hpp"

namespace {

using namespace cgroups;

int g_failures = 0;

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    ~Criterion() {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (problems.empty()) {
            std::printf("PASS  criterion %2d: %s (%.0f ms)\n", number, title.c_str(), ms);
        } else {
            ++g_failures;
            std::printf("FAIL  criterion %2d: %s (%.0f ms)\n", number, title.c_str(), ms);
            for (const auto& p : problems) std::printf("      - %s\n", p.c_str());
        }
        std::fflush(stdout);
    }
};

std::string tag(const AlphaCParams& p, const std::string& what) {
    return p.str() + ": " + what;
}

// Criteria 1 + 2: every valid parameter triple with product <= 512.
void criteria_1_2() {
    const auto params = enumerate_alpha_c({.max_order = 512});
    std::vector<FiniteGroup> groups;
    groups.reserve(params.size());
    {
        Criterion c1(1, "alpha-c existence: order, rank 2, center order and rank 3, C-group");
        c1.require(!params.empty(), "no valid parameter triples found");
        for (const auto& p : params) {
            FiniteGroup g = alpha_c(p);
            c1.require(g.order() == p.order(), tag(p, "order mismatch"));
            const RankResult r = rank(g);
            c1.require(r.rank == 2, tag(p, "rank != 2"));
            const Subgroup z = center(g);
            const int expected_center = p.n1 * (p.n2 / p.n1) * (p.n3 / p.n1);
            c1.require(z.order() == expected_center, tag(p, "center order mismatch"));
            const RankResult zr = rank_of_center(g);
            c1.require(zr.rank == 3, tag(p, "center rank != 3"));
            c1.require(is_c_group(g), tag(p, "not a C-group"));
            groups.push_back(std::move(g));
        }
    }
    {
        Criterion c2(2, "every alpha-c group <= 512 has nilpotency class exactly 2");
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto cls = nilpotency_class(groups[i]);
            c2.require(cls.has_value() && *cls == 2,
                       tag(params[i], "nilpotency class != 2"));
        }
    }
}

// Criterion 3: closed-form commutator and inverse vs the table, all pairs.
void criterion_3() {
    Criterion c(3, "commutator and inverse closed forms match the table (orders <= 256)");
    for (const auto& p : enumerate_alpha_c({.max_order = 256})) {
        const FiniteGroup g = alpha_c(p);
        const int n = g.order();
        for (int i = 0; i < n; ++i) {
            const AlphaCElement u = alpha_c_decode(p, i);
            const int inv_table = g.inverse(i);
            const int inv_formula = alpha_c_encode(p, alpha_c_inverse(p, u));
            if (inv_table != inv_formula) {
                c.require(false, tag(p, "inverse formula mismatch at " + g.labels()[i]));
                return;
            }
            for (int j = 0; j < n; ++j) {
                const AlphaCElement v = alpha_c_decode(p, j);
                const int comm_table = g.commutator(i, j);
                const int comm_formula = alpha_c_encode(p, alpha_c_commutator(p, u, v));
                if (comm_table != comm_formula) {
                    c.require(false, tag(p, "commutator formula mismatch at (" +
                                                g.labels()[i] + "," + g.labels()[j] + ")"));
                    return;
                }
            }
        }
    }
}

// Criterion 4: canonical words enumerate each element exactly once.
void criterion_4() {
    Criterion c(4, "canonical words biject onto alpha_c(2,4,4) and alpha_c(2,4,8)");
    for (const AlphaCParams p : {AlphaCParams{2, 4, 4}, AlphaCParams{2, 4, 8}}) {
        std::set<int> seen;
        for (int k1 = 0; k1 < p.n2 / p.n1; ++k1)
            for (int k2 = 0; k2 < p.n3 / p.n1; ++k2)
                for (int k3 = 0; k3 < p.n1; ++k3)
                    for (int k4 = 0; k4 < p.n1; ++k4)
                        for (int k5 = 0; k5 < p.n1; ++k5) {
                            const AlphaCElement e =
                                alpha_c_canonical_compose(p, {k1, k2, k3, k4, k5});
                            seen.insert(alpha_c_encode(p, e));
                            const auto back = alpha_c_canonical_decompose(p, e);
                            c.require(back == std::array<int, 5>{k1, k2, k3, k4, k5},
                                      tag(p, "decompose does not invert compose"));
                        }
        c.require(static_cast<long>(seen.size()) == p.order(),
                  tag(p, "canonical words are not a bijection"));
    }
}

// Criterion 5: the p = 2 proof presentation realizes alpha_c(2,4,4).
void criterion_5() {
    Criterion c(5, "p=2 uniqueness: proof presentation enumerates to alpha_c(2,4,4)");
    const EnumerationResult enumd =
        coset_enumerate(parse_presentation(p5_presentation_text(2)));
    const FiniteGroup& g = enumd.group;
    c.require(g.order() == 32, "enumerated order != 32");

    const FiniteGroup model = alpha_c({2, 4, 4});
    const IsoResult iso = is_isomorphic(g, model);
    c.require(iso.isomorphic, "not isomorphic to alpha_c(2,4,4): " + iso.obstruction);

    const Subgroup z = center(g);
    c.require(frattini(g) == z, "Frattini subgroup != center");

    const auto q = quotient(g, z);
    const auto ea = is_elementary_abelian(q.group);
    c.require(q.group.order() == 4 && ea.has_value() && ea->first == 2,
              "G/Z(G) is not elementary abelian of order 4");

    c.require(enumd.generator_elements.size() == 2, "expected two generators");
    for (int ge : enumd.generator_elements)
        c.require(g.element_order(ge) == 4, "generator order != 4");
    const int comm = g.commutator(enumd.generator_elements[0], enumd.generator_elements[1]);
    c.require(g.element_order(comm) == 2, "|[a,b]| != 2");
}

// Criterion 6: the order-64 presentation.
void criterion_6() {
    Criterion c(6, "order-64 presentation: 64 cosets, class 3, C-group");
    const EnumerationResult enumd =
        coset_enumerate(parse_presentation(order64_presentation_text()));
    c.require(enumd.group.order() == 64, "enumerated order != 64");
    const auto cls = nilpotency_class(enumd.group);
    c.require(cls.has_value() && *cls == 3, "nilpotency class != 3");
    c.require(is_c_group(enumd.group), "not a C-group");
}

// Criterion 7: alpha_c(2,4,4) x Z_2k is a C-group for k = 1..4, ranks by
// pure subset search on both the group and its center.
void criterion_7() {
    Criterion c(7, "alpha_c(2,4,4) x Z_2k is a C-group for k = 1..4 (brute-force ranks)");
    const FiniteGroup base = alpha_c({2, 4, 4});
    for (int k = 1; k <= 4; ++k) {
        const FiniteGroup g = direct_product(base, cyclic(2 * k));
        const RankResult rg = brute_force_rank(g);
        const FiniteGroup zg = subgroup_as_group(g, center(g));
        const RankResult rz = brute_force_rank(zg);
        c.require(rg.rank < rz.rank,
                  "k=" + std::to_string(k) + ": rk(G)=" + std::to_string(rg.rank) +
                      " !< rk(Z(G))=" + std::to_string(rz.rank));
    }
}

// Criterion 8: Lemma 1 ranks over small abelian products, plus
// abelian_rank vs brute force on the abelian corpus.
void criterion_8() {
    Criterion c(8, "abelian products with gcd > 1 have rank k; abelian_rank matches oracle");
    // Non-decreasing tuples (n1,...,nk), k <= 3, each factor >= 2,
    // product <= 200, gcd of the tuple > 1.
    std::vector<std::vector<int>> tuples;
    for (int a = 2; a <= 200; ++a) tuples.push_back({a});
    for (int a = 2; a <= 200; ++a)
        for (int b = a; a * b <= 200; ++b) tuples.push_back({a, b});
    for (int a = 2; a <= 200; ++a)
        for (int b = a; a * b <= 200; ++b)
            for (int d = b; a * b * d <= 200; ++d) tuples.push_back({a, b, d});
    for (const auto& t : tuples) {
        int g = 0;
        for (int v : t) g = std::gcd(g, v);
        if (g <= 1) continue;
        const FiniteGroup grp = abelian_product(t);
        const int k = static_cast<int>(t.size());
        const RankResult r = brute_force_rank(grp);
        if (r.rank != k) {
            std::ostringstream os;
            os << "(";
            for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
            os << "): brute-force rank " << r.rank << " != " << k;
            c.require(false, os.str());
        }
    }
    for (const auto& [id, grp] : build_corpus()) {
        if (!grp.is_abelian() || grp.order() > 200) continue;
        c.require(abelian_rank(grp) == brute_force_rank(grp).rank,
                  id + ": abelian_rank disagrees with brute force");
    }
}

// Criterion 9: Burnside Basis Theorem and the two Frattini routes, on
// every corpus p-group of order <= 128.
void criterion_9() {
    Criterion c(9, "Burnside basis theorem and dual Frattini routes on corpus p-groups <= 128");
    int checked = 0;
    for (const auto& [id, g] : build_corpus()) {
        const auto p = is_p_group(g);
        if (!p || g.order() > 128) continue;
        ++checked;
        const Subgroup phi = frattini(g);
        c.require(phi == frattini_via_maximals(g), id + ": Frattini routes disagree");
        const int index = g.order() / phi.order();
        int logp = 0;
        for (long q = 1; q < index; q *= *p) ++logp;
        c.require(brute_force_rank(g).rank == logp,
                  id + ": log_p |G/Phi(G)| != brute-force rank");
    }
    c.require(checked >= 10, "corpus yielded too few p-groups");
}

// Criterion 10: structural properties across the whole corpus.
void criterion_10() {
    Criterion c(10, "corpus p-groups are nilpotent; corpus C-groups are solvable");
    for (const auto& [id, g] : build_corpus()) {
        if (is_p_group(g))
            c.require(nilpotency_class(g).has_value(), id + ": p-group not nilpotent");
        if (is_c_group(g)) c.require(is_solvable(g), id + ": C-group not solvable");
    }
}

// Independent oracle for criterion 11: close generator permutations of the
// regular representation under composition and count the results.
int permutation_closure_size(const FiniteGroup& g, const std::vector<int>& gens) {
    const int n = g.order();
    std::vector<std::vector<int>> perms;
    for (int ge : gens) {
        std::vector<int> pi(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = g.mul(i, ge);
        perms.push_back(std::move(pi));
    }
    std::set<std::vector<int>> seen;
    std::vector<int> ident(static_cast<std::size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    seen.insert(ident);
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (const auto& pi : perms) {
                std::vector<int> composed(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    composed[static_cast<std::size_t>(i)] =
                        pi[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
                if (seen.insert(composed).second) next.push_back(std::move(composed));
            }
        frontier = std::move(next);
    }
    return static_cast<int>(seen.size());
}

// Criterion 11: serialization round-trips and the S3 enumeration oracle.
void criterion_11() {
    Criterion c(11, "export/reimport round-trips; S3 enumeration matches permutation oracle");
    for (const auto& g : {cyclic(12), alpha_c({2, 4, 4}), dihedral(6)}) {
        const FiniteGroup via_json = group_from_json(group_to_json(g));
        c.require(via_json.flat_table() == g.flat_table(), "JSON round trip changed the table");
        const FiniteGroup via_text = import_table_text(export_table_text(g));
        c.require(via_text.flat_table() == g.flat_table(), "text round trip changed the table");
    }
    const EnumerationResult s3 = coset_enumerate(parse_presentation("<a,b | a^2, b^2, (ab)^3>"));
    c.require(s3.group.order() == 6, "S3 presentation order != 6");
    c.require(permutation_closure_size(s3.group, s3.generator_elements) == 6,
              "permutation-closure oracle disagrees");
    c.require(!s3.group.is_abelian(), "S3 came out abelian");
}

}  // namespace

int main() {
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
