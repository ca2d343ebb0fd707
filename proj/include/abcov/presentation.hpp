#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "abcov/snf.hpp"
#include "abcov/words.hpp"

namespace abcov {

/// Finite presentation: named generators plus relator words.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    /// One row per relator, one column per generator, exponent sums.
    IntMat exponent_matrix() const;

    std::string relator_text(std::size_t i) const;
    nlohmann::json to_json() const;
    static Presentation from_json(const nlohmann::json& j);
};

/// Invariant-factor decomposition of the abelianised presentation.
AbelianInvariants abelianization(const Presentation& p);

/// The presentation of the affine group generated by the gamma/t/tp
/// maps: translation commutators, conjugation relators, the pairwise
/// gamma commutation relations and the cube relations. Every relator is
/// checked as an exact affine identity before being accepted.
Presentation gamma_presentation();

/// Right-action coset table: act[g][c] is the coset of (coset c) * g.
class CosetTable {
public:
    CosetTable(int cosets, std::vector<std::vector<int>> action);

    int cosets() const { return m_; }
    int generators() const { return static_cast<int>(action_.size()); }
    int act(int gen, int coset) const;
    int act_inverse(int gen, int coset) const;

    /// Each generator must permute the cosets and tracing every relator
    /// from every coset must return to its start.
    void verify(const Presentation& p) const;

private:
    int m_;
    std::vector<std::vector<int>> action_;
    std::vector<std::vector<int>> inverse_;
};

/// Coset table of Ker(phi) for a homomorphism to Z/modulus given by its
/// values on the generators; phi must vanish on every relator.
CosetTable coset_table_from_hom(const Presentation& p, const std::vector<int>& phi_values, int modulus = 3);

/// Subgroup presentation on Schreier generators (coset, generator) minus
/// the spanning-tree edges, with relators rewritten through the table.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

} // namespace abcov
