#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cgroups/alpha_c.hpp"
#include "cgroups/rank.hpp"
#include "cgroups/series.hpp"
#include "cgroups/subgroup.hpp"
#include "doctest.h"

using namespace cgroups;

TEST_CASE("rank headline cases") {
    RankResult r = rank(alpha_c({2, 4, 4}));
    CHECK(r.rank == 2);
    CHECK(r.method == RankMethod::Burnside);
    CHECK(generates(alpha_c({2, 4, 4}), r.witness));

    CHECK(rank(abelian_product({2, 2, 2})).rank == 3);
    CHECK(rank(cyclic(1)).rank == 0);
    CHECK(rank(cyclic(12)).rank == 1);

    FiniteGroup g = alpha_c({2, 4, 8});
    CHECK(rank(subgroup_as_group(g, center(g))).rank == 3);
}

TEST_CASE("rank_of_center") {
    CHECK(rank_of_center(alpha_c({2, 4, 4})).rank == 3);
    FiniteGroup a = abelian_product({2, 4});
    CHECK(rank_of_center(a).rank == rank(a).rank);
}

TEST_CASE("every returned witness generates") {
    std::vector<FiniteGroup> sample;
    sample.push_back(cyclic(9));
    sample.push_back(abelian_product({2, 6}));
    sample.push_back(abelian_product({2, 4, 4}));
    sample.push_back(dihedral(3));
    sample.push_back(dihedral(6));
    sample.push_back(alpha_c({2, 4, 4}));
    for (const FiniteGroup& g : sample) {
        RankResult r = rank(g);
        CHECK(static_cast<int>(r.witness.size()) == r.rank);
        CHECK(generates(g, r.witness));
    }
}

TEST_CASE("fast paths agree with the brute-force oracle") {
    std::vector<FiniteGroup> sample;
    sample.push_back(cyclic(8));
    sample.push_back(abelian_product({2, 4}));
    sample.push_back(abelian_product({3, 3}));
    sample.push_back(abelian_product({2, 2, 4}));
    sample.push_back(abelian_product({2, 3}));
    sample.push_back(dihedral(4));
    sample.push_back(dihedral(8));
    sample.push_back(alpha_c({2, 4, 4}));
    for (const FiniteGroup& g : sample)
        CHECK(rank(g).rank == brute_force_rank(g).rank);
}

TEST_CASE("Burnside shortcut: log_p |G/Phi| matches brute force on p-groups") {
    for (const FiniteGroup& g : {alpha_c({2, 4, 4}), dihedral(4), dihedral(8)}) {
        auto p = is_p_group(g);
        REQUIRE(p.has_value());
        Subgroup phi = frattini(g);
        int quot = g.order() / phi.order();
        int logp = 0;
        while (quot > 1) { quot /= *p; ++logp; }
        CHECK(logp == brute_force_rank(g).rank);
    }
}

TEST_CASE("rank is subadditive over direct products") {
    FiniteGroup g = alpha_c({2, 4, 4});
    FiniteGroup h = cyclic(4);
    CHECK(rank(direct_product(g, h)).rank <= rank(g).rank + rank(h).rank);
    CHECK(rank(direct_product(h, h)).rank <= 2);
}

TEST_CASE("search cap is reported") {
    Limits lim;
    lim.rank_k_cap = 1;
    CHECK_THROWS_AS(brute_force_rank(dihedral(3), lim), SearchCapExceeded);
}
