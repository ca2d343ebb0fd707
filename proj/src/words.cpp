#include "abcov/words.hpp"

#include <algorithm>
#include <cctype>

namespace abcov {

Word parse_word(const std::string& text, const std::vector<std::string>& generator_names,
                const std::map<std::string, std::string>* aliases) {
    // candidate spellings sorted longest-first so prefixes never shadow
    std::vector<std::pair<std::string, int>> spellings;
    for (std::size_t i = 0; i < generator_names.size(); ++i)
        spellings.emplace_back(generator_names[i], static_cast<int>(i));
    if (aliases != nullptr)
        for (const auto& [alias, canonical] : *aliases) {
            auto it = std::find(generator_names.begin(), generator_names.end(), canonical);
            if (it == generator_names.end()) throw parse_error("alias target unknown: " + canonical);
            spellings.emplace_back(alias, static_cast<int>(it - generator_names.begin()));
        }
    std::sort(spellings.begin(), spellings.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

    Word out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++pos;
            continue;
        }
        int gen = -1;
        for (const auto& [name, idx] : spellings)
            if (text.compare(pos, name.size(), name) == 0) {
                gen = idx;
                pos += name.size();
                break;
            }
        if (gen < 0) {
            if (c == '1') { // the empty word
                ++pos;
                continue;
            }
            throw parse_error("unrecognised token in word at position " + std::to_string(pos) + ": " + text);
        }
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error("exponent expected after '^' in: " + text);
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            exp = neg ? -v : v;
        }
        if (exp != 0) out.emplace_back(gen, exp);
    }
    return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& [gen, exp] : w) {
        if (!out.empty()) out += " ";
        out += generator_names[static_cast<std::size_t>(gen)];
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

Word invert_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

} // namespace abcov
