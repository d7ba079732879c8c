#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgroups/alpha_c.hpp"
#include "cgroups/finite_group.hpp"

namespace cgroups {

/// Computed invariants of one group, the unit of all reports.
struct InvariantReport {
    std::string group_id;
    int order = 0;
    int rank = 0;
    std::string rank_method;
    std::vector<int> rank_witness;
    int center_order = 0;
    int center_rank = 0;
    bool is_c_group = false;
    std::optional<int> nilpotency_class;  // absent = not nilpotent
    bool solvable = false;
    std::optional<int> p_group;
    std::string provenance;
    double millis = 0.0;
};

InvariantReport analyze(const std::string& group_id, const FiniteGroup& g,
                        const Limits& lim = {});

/// rk(G) < rk(Z(G))
bool is_c_group(const FiniteGroup& g, const Limits& lim = {});

struct AlphaCFamilyQuery {
    long max_order = 512;
    bool p_power_only = false;
    std::vector<int> primes;  // when nonempty, restrict p-power orders to these
};

/// All valid triples with product <= max_order, lexicographic.
std::vector<AlphaCParams> enumerate_alpha_c(const AlphaCFamilyQuery& q);

/// One named check of a verification suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    void add(const std::string& name, bool passed, const std::string& detail = "");
};

/// Checks every structural claim of the twisted-product construction:
/// order, generators, center order and structure, rank 2, center rank 3,
/// class 2, solvability, closed-form commutator/inverse, canonical-word
/// bijection. Failures are collected, not fail-fast.
VerifyReport verify_alpha_c(const AlphaCParams& params, const Limits& lim = {});

/// Existence and structure of the order-p^5 group: the (p,p^2,p^2) triple
/// passes verify_alpha_c, Phi(G) = Z(G), G/Z(G) elementary abelian of order
/// p^2, generator orders p^2, |[a,b]| = p; for p = 2 additionally the
/// proof presentation enumerates to an isomorphic group of order 32.
VerifyReport verify_p5_claim(int p, const Limits& lim = {});

/// alpha_c(p,p^2,p^2) x Z_{kp} is a C-group for k = 1..k_max, by
/// brute-force rank of the product and of its center.
VerifyReport verify_multiple_of_p5(int p, int k_max, const Limits& lim = {});

struct CorpusSpec {
    int cyclic_max = 32;
    int abelian_factor_count_max = 3;
    int abelian_product_max = 64;
    int dihedral_max = 8;  // n of the dihedral group, order 2n
    long alpha_c_max = 512;
    int product_k_max = 4;  // alpha_c(2,4,4) x Z_{2k} for k = 1..this
    bool include_presentations = true;
};

/// Deterministic corpus of named groups covering every family the report
/// suites run over.
std::vector<std::pair<std::string, FiniteGroup>> build_corpus(const CorpusSpec& spec = {},
                                                              const Limits& lim = {});

/// Reports for a whole corpus; parallel map over groups when jobs > 1,
/// merged in corpus order.
std::vector<InvariantReport> analyze_corpus(
    const std::vector<std::pair<std::string, FiniteGroup>>& corpus, const Limits& lim = {},
    int jobs = 1);

/// The presentation texts the suites realize via coset enumeration.
std::string order64_presentation_text();
std::string p5_presentation_text(int p);

}  // namespace cgroups
