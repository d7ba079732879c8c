#pragma once

#include <string>
#include <vector>

#include "cgroups/cgroup_search.hpp"
#include "cgroups/finite_group.hpp"

namespace cgroups {

/// Group interchange format:
/// {"order": n, "identity": e, "table": [[...]], "labels": [...],
///  "provenance": {...}}
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text, const Limits& lim = {});

FiniteGroup read_group_file(const std::string& path, const Limits& lim = {});
void write_group_file(const std::string& path, const FiniteGroup& g);

/// Multiplication-table text: n, then n rows of n 1-based indices.
std::string export_table_text(const FiniteGroup& g);
FiniteGroup import_table_text(const std::string& text, const Limits& lim = {});

/// Regular-representation permutations (right multiplication) of the given
/// generating set, one line of 1-based images per generator.
std::string export_permutations(const FiniteGroup& g, const std::vector<int>& generators);

std::string report_to_json(const InvariantReport& r, std::uint64_t seed);
std::string reports_to_json(const std::vector<InvariantReport>& rs, std::uint64_t seed);
std::string reports_to_tsv(const std::vector<InvariantReport>& rs);

}  // namespace cgroups
