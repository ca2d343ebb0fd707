#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "abcov/group.hpp"

namespace abcov {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the rational group algebra of (Z/n)^k, stored densely over
/// the n^k group-element basis (base-n index of the coordinate vector).
class GroupAlgebraElement {
public:
    GroupAlgebraElement(int modulus, int dim);
    static GroupAlgebraElement basis_element(const GroupVector& g);
    static GroupAlgebraElement unit(int modulus, int dim); // the identity group element

    int modulus() const { return n_; }
    int dim() const { return k_; }
    std::size_t basis_size() const { return c_.size(); }
    const std::vector<Rational>& dense() const { return c_; }

    const Rational& coeff(const GroupVector& g) const;
    void set_coeff(const GroupVector& g, Rational value);

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const; // convolution
    GroupAlgebraElement scaled(const Rational& f) const;
    GroupAlgebraElement translated(const GroupVector& b) const; // multiply by the basis element b

    bool is_zero() const;
    bool operator==(const GroupAlgebraElement&) const = default;

    std::size_t encode(const GroupVector& g) const;
    GroupVector decode(std::size_t index) const;

private:
    int n_;
    int k_;
    std::vector<Rational> c_;
};

/// z(H) = sum of the elements of span(generators), coefficients all 1.
struct SubgroupSum {
    Subgroup subgroup;
    GroupAlgebraElement element;
};
SubgroupSum subgroup_sum(int modulus, int dim, const std::vector<GroupVector>& generators);

/// Abstract coordinates on the order-243 automorphism group: basis
/// (w1, w2, w3, xi1, xi2) of (Z/3)^5, with xi3 = (xi1 xi2)^-1.
GroupVector parse_surface_word(const std::string& text);

/// The 55 generator triples of the quotient list, in the surface syntax:
/// six 9-element families plus the one extra triple.
std::vector<std::array<std::string, 3>> quotient_list_words();
std::vector<SubgroupSum> quotient_list_sums();

/// z(G2) for the canonical index-9 subgroup <w1 xi1, w2 xi2, w3 xi3>.
SubgroupSum canonical_target_sum();

struct MembershipResult {
    bool member = false;
    long long rank = 0;          // rank of the generated row space
    std::size_t distinct_rows = 0;
};

/// Exact ideal membership: the ideal generated by gens is the linear
/// span of {g * b : g in gens, b a group element}; the verdict comes
/// from exact rational elimination on that row space.
MembershipResult ideal_membership(const GroupAlgebraElement& target,
                                  const std::vector<GroupAlgebraElement>& gens);

} // namespace abcov
