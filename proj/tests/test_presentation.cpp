#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <random>

#include "abcov/eisenstein.hpp"
#include "abcov/presentation.hpp"

using namespace abcov;

namespace {

std::vector<int> phi_for(const Presentation& p, const std::string& distinguished) {
    std::vector<int> phi(p.generators.size(), 0);
    auto it = std::find(p.generators.begin(), p.generators.end(), distinguished);
    REQUIRE(it != p.generators.end());
    phi[static_cast<std::size_t>(it - p.generators.begin())] = 1;
    return phi;
}

} // namespace

TEST_CASE("the affine presentation assembles and verifies") {
    Presentation p = gamma_presentation();
    CHECK(p.generators.size() == 9);
    CHECK(p.relators.size() >= 15 + 12 + 3 + 3);
    for (const auto& rel : p.relators) CHECK(evaluate_word(rel) == AffineMap::identity());
}

TEST_CASE("abelianisation of the affine group is elementary of order 27") {
    auto inv = abelianization(gamma_presentation());
    CHECK(inv.free_rank == 0);
    REQUIRE(inv.torsion.size() == 3);
    for (const auto& t : inv.torsion) CHECK(t == 3);
}

TEST_CASE("abelianisation of a free presentation") {
    Presentation p;
    p.generators = {"a", "b"};
    auto inv = abelianization(p);
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
}

TEST_CASE("invariant factors do not depend on relator or generator order") {
    Presentation p = gamma_presentation();
    auto base = abelianization(p);
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 5; ++trial) {
        Presentation q = p;
        std::shuffle(q.relators.begin(), q.relators.end(), rng);
        // permute generators too
        std::vector<int> perm(p.generators.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        Presentation r;
        r.generators.resize(p.generators.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            r.generators[static_cast<std::size_t>(perm[i])] = q.generators[i];
        for (const auto& rel : q.relators) {
            Word w;
            for (auto [gen, exp] : rel) w.emplace_back(perm[static_cast<std::size_t>(gen)], exp);
            r.relators.push_back(w);
        }
        auto shuffled = abelianization(r);
        CHECK(shuffled == base);
    }
}

TEST_CASE("coset tables from homomorphisms") {
    Presentation p = gamma_presentation();

    CosetTable t3 = coset_table_from_hom(p, phi_for(p, "g3"));
    CHECK(t3.cosets() == 3);
    t3.verify(p);

    CosetTable trivial = coset_table_from_hom(p, std::vector<int>(9, 0));
    CHECK(trivial.cosets() == 1);

    // phi(t3) = 1 does not vanish on the commutation relator
    std::vector<int> bad(9, 0);
    bad[5] = 1; // t3
    CHECK_THROWS_AS(coset_table_from_hom(p, bad), precondition_error);
}

TEST_CASE("subgroup presentations and their homology") {
    Presentation p = gamma_presentation();
    for (const std::string dist : {"g3", "g1", "g2"}) {
        CosetTable t = coset_table_from_hom(p, phi_for(p, dist));
        Presentation sub = reidemeister_schreier(p, t);
        CHECK(sub.generators.size() == 3 * 9 - 2);
        auto inv = abelianization(sub);
        CHECK(inv.free_rank == 2);
        REQUIRE(inv.torsion.size() == 2);
        CHECK(inv.torsion[0] == 3);
        CHECK(inv.torsion[1] == 3);
    }
}

TEST_CASE("index-one rewriting is the identity on homology") {
    Presentation p = gamma_presentation();
    CosetTable t = coset_table_from_hom(p, std::vector<int>(9, 0));
    Presentation sub = reidemeister_schreier(p, t);
    CHECK(sub.generators.size() == 9);
    CHECK(abelianization(sub) == abelianization(p));
}

TEST_CASE("schreier generators stay in the kernel and survive conjugation") {
    // membership is read off the faithful affine representation: a word
    // lies in Ker(phi_g3) iff its linear part does not rotate the first
    // coordinate
    Presentation p = gamma_presentation();
    std::vector<int> phi = phi_for(p, "g3");
    CosetTable t = coset_table_from_hom(p, phi);

    auto rep_word = [&](int coset) {
        Word w;
        for (int s = 0; s < coset; ++s) w.emplace_back(2, 1); // g3^coset
        return w;
    };
    for (int c = 0; c < t.cosets(); ++c)
        for (std::size_t g = 0; g < 9; ++g) {
            int to = t.act(static_cast<int>(g), c);
            Word schreier = rep_word(c);
            schreier.emplace_back(static_cast<int>(g), 1);
            Word back = invert_word(rep_word(to));
            schreier.insert(schreier.end(), back.begin(), back.end());
            AffineMap m = evaluate_word(schreier);
            CHECK(m.rot[0] % 3 == 0); // in the kernel
            for (std::size_t conj = 0; conj < 9; ++conj) {
                Word w{{static_cast<int>(conj), 1}};
                w.insert(w.end(), schreier.begin(), schreier.end());
                w.emplace_back(static_cast<int>(conj), -1);
                CHECK(evaluate_word(w).rot[0] % 3 == 0); // normality via the kernel criterion
            }
        }
}

TEST_CASE("json round trip") {
    Presentation p = gamma_presentation();
    nlohmann::json j = p.to_json();
    Presentation q = Presentation::from_json(j);
    CHECK(q.generators == p.generators);
    REQUIRE(q.relators.size() == p.relators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i) CHECK(q.relators[i] == p.relators[i]);
}
