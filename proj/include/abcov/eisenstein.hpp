#pragma once

#include <array>
#include <string>
#include <vector>

#include "abcov/words.hpp"

namespace abcov {

/// Eisenstein number (a + b*w)/3 with w a primitive cube root of unity,
/// w^2 = -1 - w. The fixed denominator 3 covers all 3-torsion data; the
/// ring operations used here (addition, multiplication by integral
/// Eisenstein numbers) stay within this scale.
struct EisScaled {
    long long a = 0; // numerator of the rational part
    long long b = 0; // numerator of the w part

    static EisScaled integer(long long x) { return {3 * x, 0}; }
    static EisScaled omega() { return {0, 3}; }
    static EisScaled eta() { return {2, 1}; }      // (2 + w)/3, the 3-torsion point
    static EisScaled two_eta() { return {4, 2}; }

    EisScaled operator+(const EisScaled& o) const { return {a + o.a, b + o.b}; }
    EisScaled operator-(const EisScaled& o) const { return {a - o.a, b - o.b}; }
    EisScaled operator-() const { return {-a, -b}; }
    bool operator==(const EisScaled&) const = default;

    /// Multiplication by w^j.
    EisScaled rotated(int j) const;
    /// Multiplication by the integral Eisenstein number p + q*w.
    EisScaled times_integral(long long p, long long q) const;

    bool in_lattice() const { return a % 3 == 0 && b % 3 == 0; }
    bool lattice_equal(const EisScaled& o) const { return (*this - o).in_lattice(); }
};

using EisPoint = std::array<EisScaled, 3>;

/// Affine transformation of C^3 with diagonal w-power linear part.
struct AffineMap {
    std::array<int, 3> rot{0, 0, 0}; // exponents of w on the diagonal
    EisPoint tr{};

    static AffineMap identity() { return {}; }
    AffineMap after(const AffineMap& inner) const; // this . inner
    AffineMap inverse() const;
    AffineMap power(int e) const;
    EisPoint apply(const EisPoint& z) const;

    bool operator==(const AffineMap&) const = default; // strict, in A(3,C)
    bool lattice_equal(const AffineMap& o) const;      // as maps on E^3
    bool is_identity_on_torus() const;
};

struct EisGenerators {
    std::array<AffineMap, 3> gamma; // lifts of the three hypersurface symmetries
    std::array<AffineMap, 3> t;     // translations by e_i = 1
    std::array<AffineMap, 3> tp;    // translations by e'_i = w
};

/// The nine generators of the affine group Gamma.
const EisGenerators& make_generators();

const std::vector<std::string>& gamma_generator_names(); // g1..g3,t1..t3,tp1..tp3

AffineMap evaluate_word(const Word& w);
AffineMap evaluate_word(const std::string& text);
Word parse_gamma_word(const std::string& text);

/// Exact comparison of two words as affine maps; with mod_lattice the
/// comparison is as transformations of E^3 instead.
bool verify_relation(const std::string& lhs, const std::string& rhs, bool mod_lattice = false);

struct FixedLocus {
    enum class Kind { empty, points, everything };
    Kind kind = Kind::empty;
    long long count = 0; // -1 when a whole coordinate is fixed
    EisPoint witness{};  // valid when kind != empty
};

/// Fixed points of m acting on E^3 = (C/(Z+Zw))^3, coordinate by
/// coordinate. Rotational coordinates are solved by enumerating the nine
/// 1/3-lattice residues, which is exhaustive for translations drawn from
/// eta-multiples and lattice vectors.
FixedLocus fixed_locus(const AffineMap& m);

/// The 27 transformations gamma1^a gamma2^b gamma3^c in lexicographic
/// (a,b,c) order.
struct TorusClass {
    std::array<int, 3> exponents;
    AffineMap map;
};
std::vector<TorusClass> torus_action_classes();

/// Sub-list of `group` fixing `point` mod lattice.
std::vector<std::size_t> stabilizer(const EisPoint& point, const std::vector<AffineMap>& group);

/// gamma_i t_j gamma_i^-1 and gamma_i t'_j gamma_i^-1 expressed as
/// translation words, each verified as an exact affine identity.
struct ConjugationEntry {
    int i = 0;          // conjugating gamma index, 1-based
    int j = 0;          // translation index, 1-based
    bool primed = false;
    std::string word;   // the conjugate, as a word in t_j / tp_j
};
std::vector<ConjugationEntry> conjugation_table();

} // namespace abcov
