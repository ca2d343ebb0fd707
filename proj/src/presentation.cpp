#include "abcov/presentation.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>

#include "abcov/eisenstein.hpp"

namespace abcov {

IntMat Presentation::exponent_matrix() const {
    IntMat m(relators.size(), std::vector<Int>(generators.size(), 0));
    for (std::size_t r = 0; r < relators.size(); ++r)
        for (const auto& [gen, exp] : relators[r]) m[r][static_cast<std::size_t>(gen)] += exp;
    return m;
}

std::string Presentation::relator_text(std::size_t i) const { return word_to_string(relators[i], generators); }

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["generators"] = generators;
    auto rel = nlohmann::json::array();
    for (std::size_t i = 0; i < relators.size(); ++i) rel.push_back(relator_text(i));
    j["relators"] = rel;
    return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& text : j.at("relators")) p.relators.push_back(parse_word(text.get<std::string>(), p.generators));
    return p;
}

AbelianInvariants abelianization(const Presentation& p) {
    return cokernel_invariants(p.exponent_matrix(), p.generators.size());
}

Presentation gamma_presentation() {
    Presentation p;
    p.generators = gamma_generator_names();
    auto idx = [&](const std::string& name) {
        return static_cast<int>(std::find(p.generators.begin(), p.generators.end(), name) - p.generators.begin());
    };

    std::vector<Word> rels;
    // translation commutators
    std::vector<std::string> translations{"t1", "t2", "t3", "tp1", "tp2", "tp3"};
    for (std::size_t i = 0; i < translations.size(); ++i)
        for (std::size_t j = i + 1; j < translations.size(); ++j) {
            int a = idx(translations[i]), b = idx(translations[j]);
            rels.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
        }
    // conjugation relators, straight from the verified conjugation table
    for (const auto& entry : conjugation_table()) {
        int g = idx("g" + std::to_string(entry.i));
        int t = idx((entry.primed ? "tp" : "t") + std::to_string(entry.j));
        Word w{{g, 1}, {t, 1}, {g, -1}};
        Word target = parse_word(entry.word, p.generators);
        Word inv = invert_word(target);
        w.insert(w.end(), inv.begin(), inv.end());
        rels.push_back(std::move(w));
    }
    // pairwise gamma commutation: g_i g_j = t_k g_j g_i for cyclic (i,j,k)
    for (auto [i, j, k] : {std::array<int, 3>{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
        int gi = idx("g" + std::to_string(i)), gj = idx("g" + std::to_string(j)), tk = idx("t" + std::to_string(k));
        rels.push_back({{gi, 1}, {gj, 1}, {gi, -1}, {gj, -1}, {tk, -1}});
    }
    // cubes: g_i^3 = t_{i+2}^2 tp_{i+2}
    for (int i = 1; i <= 3; ++i) {
        int k = ((i + 1) % 3) + 1;
        rels.push_back({{idx("g" + std::to_string(i)), 3},
                        {idx("tp" + std::to_string(k)), -1},
                        {idx("t" + std::to_string(k)), -2}});
    }

    for (const auto& r : rels) {
        if (!(evaluate_word(r) == AffineMap::identity()))
            throw consistency_error("relator failed affine verification: " + word_to_string(r, p.generators));
    }
    p.relators = std::move(rels);
    return p;
}

CosetTable::CosetTable(int cosets, std::vector<std::vector<int>> action) : m_(cosets), action_(std::move(action)) {
    inverse_.assign(action_.size(), std::vector<int>(static_cast<std::size_t>(m_), -1));
    for (std::size_t g = 0; g < action_.size(); ++g) {
        if (static_cast<int>(action_[g].size()) != m_)
            throw precondition_error("coset table: incomplete generator column");
        for (int c = 0; c < m_; ++c) {
            int to = action_[g][static_cast<std::size_t>(c)];
            if (to < 0 || to >= m_) throw precondition_error("coset table: entry out of range");
            if (inverse_[g][static_cast<std::size_t>(to)] != -1)
                throw precondition_error("coset table: generator does not act as a permutation");
            inverse_[g][static_cast<std::size_t>(to)] = c;
        }
    }
}

int CosetTable::act(int gen, int coset) const {
    return action_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(coset)];
}

int CosetTable::act_inverse(int gen, int coset) const {
    return inverse_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(coset)];
}

void CosetTable::verify(const Presentation& p) const {
    if (static_cast<int>(p.generators.size()) != generators())
        throw precondition_error("coset table: generator count mismatch");
    for (const auto& rel : p.relators)
        for (int c = 0; c < m_; ++c) {
            int cur = c;
            for (const auto& [gen, exp] : rel) {
                int steps = exp >= 0 ? exp : -exp;
                for (int s = 0; s < steps; ++s) cur = exp >= 0 ? act(gen, cur) : act_inverse(gen, cur);
            }
            if (cur != c) throw precondition_error("coset table inconsistent with a relator");
        }
}

CosetTable coset_table_from_hom(const Presentation& p, const std::vector<int>& phi_values, int modulus) {
    if (phi_values.size() != p.generators.size())
        throw dimension_error("coset_table_from_hom: one value per generator required");
    auto norm = [&](long long x) { return static_cast<int>(((x % modulus) + modulus) % modulus); };
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        long long acc = 0;
        for (const auto& [gen, exp] : p.relators[r])
            acc += static_cast<long long>(exp) * phi_values[static_cast<std::size_t>(gen)];
        if (norm(acc) != 0)
            throw precondition_error("phi does not vanish on relator: " + p.relator_text(r));
    }
    // image subgroup of Z/modulus
    int step = modulus;
    for (int v : phi_values)
        if (norm(v) != 0) step = std::gcd(step, norm(v));
    int cosets = step == modulus ? 1 : modulus / step;
    std::vector<std::vector<int>> action(p.generators.size(), std::vector<int>(static_cast<std::size_t>(cosets), 0));
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        for (int c = 0; c < cosets; ++c)
            action[g][static_cast<std::size_t>(c)] = (c + norm(phi_values[g]) / step) % cosets;
    CosetTable t(cosets, std::move(action));
    t.verify(p);
    return t;
}

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
    t.verify(p);
    const int m = t.cosets();
    const int ngen = static_cast<int>(p.generators.size());

    // spanning tree by breadth-first search from coset 0
    std::vector<int> order{0};
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    seen[0] = true;
    std::vector<std::pair<int, int>> tree; // (coset, gen) edges
    for (std::size_t head = 0; head < order.size(); ++head) {
        int c = order[head];
        for (int g = 0; g < ngen; ++g) {
            int to = t.act(g, c);
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = true;
                order.push_back(to);
                tree.emplace_back(c, g);
            }
        }
    }
    if (static_cast<int>(order.size()) != m)
        throw precondition_error("reidemeister_schreier: coset table is not transitive");

    // Schreier generator indices; tree edges map to the identity
    std::vector<std::vector<int>> sg(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(ngen), -1));
    for (const auto& [c, g] : tree) sg[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] = -2;
    Presentation out;
    for (int c = 0; c < m; ++c)
        for (int g = 0; g < ngen; ++g) {
            auto& slot = sg[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)];
            if (slot == -2) continue;
            slot = static_cast<int>(out.generators.size());
            std::string name = p.generators[static_cast<std::size_t>(g)];
            if (m > 1) name += "@" + std::to_string(c);
            out.generators.push_back(name);
        }

    for (const auto& rel : p.relators)
        for (int start = 0; start < m; ++start) {
            Word w;
            int cur = start;
            for (const auto& [gen, exp] : rel) {
                int steps = exp >= 0 ? exp : -exp;
                for (int s = 0; s < steps; ++s) {
                    if (exp >= 0) {
                        int slot = sg[static_cast<std::size_t>(cur)][static_cast<std::size_t>(gen)];
                        if (slot >= 0) w.emplace_back(slot, 1);
                        cur = t.act(gen, cur);
                    } else {
                        cur = t.act_inverse(gen, cur);
                        int slot = sg[static_cast<std::size_t>(cur)][static_cast<std::size_t>(gen)];
                        if (slot >= 0) w.emplace_back(slot, -1);
                    }
                }
            }
            out.relators.push_back(std::move(w));
        }
    return out;
}

} // namespace abcov
