#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgroups/cgroup_search.hpp"
#include "cgroups/group_io.hpp"
#include "cgroups/isomorphism.hpp"
#include "cgroups/presentation.hpp"
#include "cgroups/rank.hpp"
#include "cgroups/todd_coxeter.hpp"

namespace {

using namespace cgroups;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw GroupError("cannot write " + out_path);
        out << text;
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GroupError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int print_verify(const VerifyReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
    return rep.ok() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group toolkit: constructions, invariants, C-group search"};
    app.require_subcommand(1);

    Limits lim;
    std::string format = "json";
    int jobs = 1;
    app.add_option("--order-cap", lim.order_cap, "largest group order")
        ->envname("CGROUPS_ORDER_CAP");
    app.add_option("--iso-cap", lim.iso_cap, "isomorphism test cap")
        ->envname("CGROUPS_ISO_CAP");
    app.add_option("--max-cosets", lim.max_cosets, "coset enumeration cap")
        ->envname("CGROUPS_MAX_COSETS");
    app.add_option("--rank-k-cap", lim.rank_k_cap, "largest generating-set size searched")
        ->envname("CGROUPS_RANK_K_CAP");
    app.add_option("--seed", lim.seed, "seed for sampled checks")->envname("CGROUPS_SEED");
    app.add_option("--format", format, "output format: json|tsv")
        ->envname("CGROUPS_FORMAT")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--jobs", jobs, "parallelism degree for corpus runs")
        ->envname("CGROUPS_JOBS");

    // construct <kind> [params] [--out file]
    auto* construct = app.add_subcommand("construct", "build a group and write its JSON");
    std::string kind, out_path, pres_file, file_a, file_b, ns_list;
    int n = 0, n1 = 0, n2 = 0, n3 = 0;
    construct->add_option("kind", kind, "cyclic|abelian|alpha-c|product|presentation|dihedral")
        ->required();
    construct->add_option("--n", n, "order parameter (cyclic, dihedral)");
    construct->add_option("--ns", ns_list, "comma-separated cyclic factors (abelian)");
    construct->add_option("--n1", n1);
    construct->add_option("--n2", n2);
    construct->add_option("--n3", n3);
    construct->add_option("--a", file_a, "left factor group file (product)");
    construct->add_option("--b", file_b, "right factor group file (product)");
    construct->add_option("--file", pres_file, "presentation text file");
    construct->add_option("--out", out_path, "output path (default stdout)");

    auto* invariants = app.add_subcommand("invariants", "full invariant report of a group");
    std::string inv_file;
    invariants->add_option("file", inv_file, "group JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    int vp = 2, vkmax = 4;
    long vmax_order = 512;
    verify->add_option("suite", suite, "paper|alpha-c|p5|corpus")->required();
    verify->add_option("--p", vp, "prime for the p5 suite");
    verify->add_option("--k-max", vkmax, "k range for the multiple-of-p^5 checks");
    verify->add_option("--max-order", vmax_order, "order bound for the alpha-c suite");

    auto* search = app.add_subcommand("search", "enumerate the twisted-product family");
    long smax_order = 512;
    search->add_option("--max-order", smax_order, "order bound")->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test between two group files");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();

    auto* exp = app.add_subcommand("export", "text export for external tools");
    std::string exp_file, exp_format = "table", exp_out;
    exp->add_option("file", exp_file)->required();
    exp->add_option("--export-format", exp_format, "table|perms")
        ->check(CLI::IsMember({"table", "perms"}));
    exp->add_option("--out", exp_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            FiniteGroup g = [&]() -> FiniteGroup {
                if (kind == "cyclic") return cyclic(n, lim);
                if (kind == "dihedral") return dihedral(n, lim);
                if (kind == "abelian") {
                    std::vector<int> ns;
                    std::stringstream ss(ns_list);
                    std::string item;
                    while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
                    return abelian_product(ns, lim);
                }
                if (kind == "alpha-c") return alpha_c({n1, n2, n3}, lim);
                if (kind == "product")
                    return direct_product(read_group_file(file_a, lim),
                                          read_group_file(file_b, lim), lim);
                if (kind == "presentation")
                    return coset_enumerate(parse_presentation(read_text(pres_file)),
                                           lim.max_cosets, lim)
                        .group;
                throw GroupError("unknown construct kind '" + kind + "'");
            }();
            emit(group_to_json(g), out_path);
            return kExitOk;
        }

        if (invariants->parsed()) {
            FiniteGroup g = read_group_file(inv_file, lim);
            InvariantReport r = analyze(inv_file, g, lim);
            if (format == "tsv")
                std::cout << reports_to_tsv({r});
            else
                std::cout << report_to_json(r, lim.seed);
            return kExitOk;
        }

        if (verify->parsed()) {
            if (suite == "alpha-c") {
                VerifyReport all;
                for (const AlphaCParams& p : enumerate_alpha_c({vmax_order, false, {}})) {
                    VerifyReport r = verify_alpha_c(p, lim);
                    all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
                }
                return print_verify(all);
            }
            if (suite == "p5") return print_verify(verify_p5_claim(vp, lim));
            if (suite == "corpus" || suite == "paper") {
                VerifyReport all;
                auto corpus = build_corpus({}, lim);
                auto reports = analyze_corpus(corpus, lim, jobs);
                for (const auto& r : reports) {
                    if (r.p_group)
                        all.add(r.group_id + ": p-group is nilpotent",
                                r.nilpotency_class.has_value());
                    if (r.is_c_group)
                        all.add(r.group_id + ": C-group is solvable", r.solvable);
                }
                if (suite == "paper") {
                    for (const AlphaCParams& p : enumerate_alpha_c({512, false, {}})) {
                        VerifyReport r = verify_alpha_c(p, lim);
                        all.checks.insert(all.checks.end(), r.checks.begin(),
                                          r.checks.end());
                    }
                    VerifyReport p5 = verify_p5_claim(2, lim);
                    all.checks.insert(all.checks.end(), p5.checks.begin(), p5.checks.end());
                    VerifyReport mult = verify_multiple_of_p5(vp, vkmax, lim);
                    all.checks.insert(all.checks.end(), mult.checks.begin(),
                                      mult.checks.end());
                }
                return print_verify(all);
            }
            std::cerr << "unknown suite '" << suite << "'\n";
            return kExitUsage;
        }

        if (search->parsed()) {
            std::vector<InvariantReport> reports;
            for (const AlphaCParams& p : enumerate_alpha_c({smax_order, false, {}}))
                reports.push_back(analyze("alphaC" + p.str(), alpha_c(p, lim), lim));
            if (format == "tsv")
                std::cout << reports_to_tsv(reports);
            else
                std::cout << reports_to_json(reports, lim.seed);
            return kExitOk;
        }

        if (iso->parsed()) {
            FiniteGroup a = read_group_file(iso_a, lim);
            FiniteGroup b = read_group_file(iso_b, lim);
            if (a.order() != b.order()) {
                std::cout << "not isomorphic (obstruction: orders " << a.order() << " vs "
                          << b.order() << ")\n";
                return kExitOk;
            }
            IsoResult r = is_isomorphic(a, b, lim);
            if (r.isomorphic) {
                std::cout << "isomorphic\n";
                return kExitOk;
            }
            std::cout << "not isomorphic";
            if (!r.obstruction.empty()) std::cout << " (obstruction: " << r.obstruction << ")";
            std::cout << "\n";
            return kExitOk;
        }

        if (exp->parsed()) {
            FiniteGroup g = read_group_file(exp_file, lim);
            if (exp_format == "table") {
                emit(export_table_text(g), exp_out);
            } else {
                RankResult rk = rank(g, lim);
                std::vector<int> gens = rk.witness;
                if (gens.empty()) gens.push_back(g.identity());
                emit(export_permutations(g, gens), exp_out);
            }
            return kExitOk;
        }
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const EnumerationOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const SearchCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidAlphaCParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotAGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
