#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abcov/errors.hpp"

namespace abcov {

/// Word over named generators: (generator index, nonzero exponent) pairs.
using Word = std::vector<std::pair<int, int>>;

/// Parses "g1 g2^-1 t3^2" style words. Juxtaposition is composition;
/// '*' and whitespace both separate letters; '^' takes an integer
/// exponent. Generator names are matched longest-first; `aliases` maps
/// alternative spellings onto canonical names.
Word parse_word(const std::string& text, const std::vector<std::string>& generator_names,
                const std::map<std::string, std::string>* aliases = nullptr);

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

Word invert_word(const Word& w);

} // namespace abcov
