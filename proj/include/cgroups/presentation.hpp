#pragma once

#include <string>
#include <vector>

#include "cgroups/errors.hpp"

namespace cgroups {

/// Relator words are signed generator symbols: +("index"+1) for a
/// generator, -("index"+1) for its inverse. Words are freely reduced.
struct Presentation {
    int generator_count = 0;
    std::vector<std::string> generator_names;
    std::vector<std::vector<int>> relators;
};

/// Grammar: '<' gens '|' relators '>'. Gens: comma-separated names.
/// Relators: comma-separated words or equation chains w1=w2=...; each
/// equation contributes w_i * w_{i+1}^-1. Word atoms: name, name^k
/// (k possibly negative), (word)^k, commutator [u,v] = u v u^-1 v^-1,
/// and '1' for the empty word. Whitespace ignored.
Presentation parse_presentation(const std::string& text);

std::vector<int> free_reduce(std::vector<int> word);
std::vector<int> invert_word(const std::vector<int>& word);

}  // namespace cgroups
