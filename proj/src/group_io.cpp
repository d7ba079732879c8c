#include "cgroups/group_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cgroups {

using nlohmann::json;

std::string group_to_json(const FiniteGroup& g) {
    json j;
    j["order"] = g.order();
    j["identity"] = g.identity();
    j["table"] = g.rows();
    if (!g.labels().empty()) j["labels"] = g.labels();
    json prov;
    prov["tag"] = g.provenance().tag;
    prov["detail"] = g.provenance().detail;
    prov["associativity"] = g.provenance().assoc_exhaustive ? "exhaustive" : "sampled";
    if (!g.provenance().assoc_exhaustive)
        prov["sampled_triples"] = g.provenance().assoc_samples;
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

FiniteGroup group_from_json(const std::string& text, const Limits& lim) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw NotAGroup(std::string("invalid group JSON: ") + e.what());
    }
    if (!j.contains("table") || !j["table"].is_array())
        throw NotAGroup("group JSON lacks a table");
    std::vector<std::vector<int>> table;
    try {
        table = j["table"].get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw NotAGroup(std::string("invalid table: ") + e.what());
    }
    FiniteGroup g = FiniteGroup::from_table(table, lim);
    Provenance prov = g.provenance();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("provenance") && j["provenance"].is_object()) {
        const auto& p = j["provenance"];
        if (p.contains("tag")) prov.tag = p["tag"].get<std::string>();
        if (p.contains("detail")) prov.detail = p["detail"].get<std::string>();
    }
    // Rebuild so labels/provenance ride along with the validated table.
    return FiniteGroup::from_parts(g.order(), g.flat_table(), std::move(prov),
                                   std::move(labels), lim);
}

FiniteGroup read_group_file(const std::string& path, const Limits& lim) {
    std::ifstream in(path);
    if (!in) throw GroupError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return group_from_json(ss.str(), lim);
}

void write_group_file(const std::string& path, const FiniteGroup& g) {
    std::ofstream out(path);
    if (!out) throw GroupError("cannot write " + path);
    out << group_to_json(g);
}

std::string export_table_text(const FiniteGroup& g) {
    std::ostringstream os;
    const int n = g.order();
    os << n << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) os << (j ? " " : "") << g.mul(i, j) + 1;
        os << "\n";
    }
    return os.str();
}

FiniteGroup import_table_text(const std::string& text, const Limits& lim) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n) || n < 1) throw NotAGroup("table text: bad order line");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(is >> v)) throw NotAGroup("table text: truncated");
            table[i][j] = v - 1;  // 1-based on disk
        }
    return FiniteGroup::from_table(table, lim);
}

std::string export_permutations(const FiniteGroup& g, const std::vector<int>& generators) {
    std::ostringstream os;
    const int n = g.order();
    for (int gen : generators) {
        for (int i = 0; i < n; ++i) os << (i ? " " : "") << g.mul(i, gen) + 1;
        os << "\n";
    }
    return os.str();
}

namespace {

json report_json(const InvariantReport& r, std::uint64_t seed) {
    json j;
    j["group_id"] = r.group_id;
    j["order"] = r.order;
    j["rank"] = r.rank;
    j["rank_method"] = r.rank_method;
    j["witness"] = r.rank_witness;
    j["center_order"] = r.center_order;
    j["center_rank"] = r.center_rank;
    j["is_c_group"] = r.is_c_group;
    if (r.nilpotency_class)
        j["nilpotency_class"] = *r.nilpotency_class;
    else
        j["nilpotency_class"] = "not nilpotent";
    j["solvable"] = r.solvable;
    if (r.p_group)
        j["p_group"] = *r.p_group;
    else
        j["p_group"] = nullptr;
    j["provenance"] = r.provenance;
    j["timings"] = {{"analyze_ms", r.millis}};
    j["seed"] = seed;
    return j;
}

}  // namespace

std::string report_to_json(const InvariantReport& r, std::uint64_t seed) {
    return report_json(r, seed).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<InvariantReport>& rs, std::uint64_t seed) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_json(r, seed));
    return arr.dump(2) + "\n";
}

std::string reports_to_tsv(const std::vector<InvariantReport>& rs) {
    std::ostringstream os;
    os << "group_id\torder\trank\tcenter_rank\tis_c_group\tclass\tsolvable\n";
    for (const auto& r : rs) {
        os << r.group_id << "\t" << r.order << "\t" << r.rank << "\t" << r.center_rank
           << "\t" << (r.is_c_group ? "true" : "false") << "\t";
        if (r.nilpotency_class)
            os << *r.nilpotency_class;
        else
            os << "not nilpotent";
        os << "\t" << (r.solvable ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace cgroups
