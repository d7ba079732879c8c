#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "cgroups/alpha_c.hpp"
#include "cgroups/group_io.hpp"
#include "cgroups/rank.hpp"
#include "doctest.h"

using namespace cgroups;

namespace {

// Brute-force closure of permutations under composition, the oracle for
// the regular-representation export.
std::set<std::vector<int>> permutation_closure(std::vector<std::vector<int>> gens) {
    const std::size_t deg = gens[0].size();
    std::vector<int> id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> todo{id};
    while (!todo.empty()) {
        std::vector<int> cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            std::vector<int> next(deg);
            for (std::size_t i = 0; i < deg; ++i) next[i] = g[cur[i]];
            if (seen.insert(next).second) todo.push_back(next);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("group JSON round trip") {
    FiniteGroup g = alpha_c({2, 4, 4});
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.flat_table() == g.flat_table());
    CHECK(back.identity() == g.identity());
    CHECK(back.labels() == g.labels());
    CHECK(back.provenance().tag == "alpha-c");
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(group_from_json("{not json"), NotAGroup);
    CHECK_THROWS_AS(group_from_json("{\"order\": 2}"), NotAGroup);
    CHECK_THROWS_AS(group_from_json("{\"table\": [[0,1],[1,1]]}"), NotAGroup);
}

TEST_CASE("table text export format") {
    CHECK(export_table_text(cyclic(1)) == "1\n1\n");
    CHECK(export_table_text(cyclic(3)) == "3\n1 2 3\n2 3 1\n3 1 2\n");
}

TEST_CASE("table text round trip") {
    FiniteGroup g = alpha_c({2, 4, 4});
    FiniteGroup back = import_table_text(export_table_text(g));
    CHECK(back.flat_table() == g.flat_table());
}

TEST_CASE("permutation export closes to the group order") {
    FiniteGroup g = alpha_c({2, 4, 4});
    RankResult rk = rank(g);
    std::string text = export_permutations(g, rk.witness);

    // Parse back: one line of 1-based images per generator.
    std::vector<std::vector<int>> perms;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> p;
        int v;
        while (ls >> v) p.push_back(v - 1);
        if (!p.empty()) perms.push_back(p);
    }
    REQUIRE(perms.size() == 2);
    REQUIRE(perms[0].size() == 32);
    CHECK(permutation_closure(perms).size() == 32);
}

TEST_CASE("report serialization") {
    InvariantReport r;
    r.group_id = "cyclic(6)";
    r.order = 6;
    r.rank = 1;
    r.rank_method = "abelian";
    r.center_order = 6;
    r.center_rank = 1;
    r.is_c_group = false;
    r.nilpotency_class = 1;
    r.solvable = true;

    std::string tsv = reports_to_tsv({r});
    CHECK(tsv.find("group_id\torder\trank\tcenter_rank\tis_c_group\tclass\tsolvable") == 0);
    CHECK(tsv.find("cyclic(6)\t6\t1\t1\tfalse\t1\ttrue") != std::string::npos);

    std::string j = report_to_json(r, 42);
    CHECK(j.find("\"seed\": 42") != std::string::npos);
    CHECK(j.find("\"is_c_group\": false") != std::string::npos);

    InvariantReport nn = r;
    nn.nilpotency_class.reset();
    CHECK(report_to_json(nn, 1).find("not nilpotent") != std::string::npos);
}
