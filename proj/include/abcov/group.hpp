#pragma once

#include <compare>
#include <set>
#include <vector>

#include "abcov/errors.hpp"

namespace abcov {

/// Element of (Z/n)^k with coordinatewise addition. Immutable after
/// construction; coordinates are always normalised into [0, n).
class GroupVector {
public:
    GroupVector(int modulus, std::vector<int> coords);
    static GroupVector zero(int modulus, int dim);

    int modulus() const { return n_; }
    int dim() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return c_; }

    GroupVector operator+(const GroupVector& o) const;
    GroupVector operator-() const;
    GroupVector operator*(int scalar) const;
    bool is_zero() const;
    int order() const; // additive order, divides n

    friend bool operator==(const GroupVector&, const GroupVector&) = default;
    friend auto operator<=>(const GroupVector&, const GroupVector&) = default;

private:
    int n_;
    std::vector<int> c_;
};

/// Homomorphism (Z/n)^k -> (Z/n)^k' given by a k' x k matrix mod n.
class GroupHom {
public:
    GroupHom(int modulus, std::vector<std::vector<int>> rows);
    static GroupHom zero(int modulus, int src_dim, int dst_dim);

    int modulus() const { return n_; }
    int src_dim() const { return src_; }
    int dst_dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    GroupVector apply(const GroupVector& v) const;
    GroupVector column(int j) const;
    GroupHom compose(const GroupHom& inner) const; // this after inner

private:
    int n_;
    int src_;
    std::vector<std::vector<int>> rows_;
};

/// Rank of the matrix over the field Z/n; n must be prime.
int matrix_rank_mod_n(const GroupHom& h);

/// Subgroup of (Z/n)^k, enumerated by breadth-first closure of its
/// generators. Keeps both the full element set (sorted) and a reduced
/// independent generating set.
class Subgroup {
public:
    static Subgroup span(int modulus, int dim, const std::vector<GroupVector>& generators);

    int modulus() const { return n_; }
    int dim() const { return k_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<GroupVector>& elements() const { return elements_; }
    const std::vector<GroupVector>& generators() const { return gens_; }
    const std::vector<GroupVector>& basis() const { return basis_; }

    bool contains(const GroupVector& v) const;
    bool contains_subgroup(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const;

private:
    Subgroup() = default;
    int n_ = 0;
    int k_ = 0;
    std::vector<GroupVector> gens_;
    std::vector<GroupVector> basis_;
    std::vector<GroupVector> elements_; // sorted
    std::set<GroupVector> lookup_;
};

/// Ker(h) intersected with s.
Subgroup kernel_image_intersect(const GroupHom& h, const Subgroup& s);

/// Character of (Z/n)^k represented by a dual vector; the pairing is the
/// mod-n dot product of coordinates.
class Character {
public:
    explicit Character(GroupVector dual);

    int modulus() const { return dual_.modulus(); }
    int dim() const { return dual_.dim(); }
    const GroupVector& dual() const { return dual_; }
    int order() const { return dual_.order(); }

    int pair(const GroupVector& g) const;    // value in [0, n)
    int value_mod_d(const GroupVector& g) const; // canonical image in Z/d
    Character inverse() const;

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;

private:
    GroupVector dual_;
};

/// Canonical coordinates on the quotient S/H. A fixed basis of the
/// quotient is chosen deterministically (first elements of S, in sorted
/// order, that are independent modulo H), so equal cosets always project
/// to the same coordinate vector.
class QuotientMap {
public:
    QuotientMap(const Subgroup& ambient_sub, const Subgroup& h);

    int quotient_dim() const { return q_; }
    const std::vector<GroupVector>& basis() const { return basis_; }

    /// Coset coordinates of v; v must lie in the ambient subgroup.
    GroupVector project(const GroupVector& v) const;

private:
    int n_;
    int q_;
    std::vector<GroupVector> basis_;
    std::vector<std::pair<GroupVector, GroupVector>> table_; // element -> coords, sorted
};

/// Canonical representatives of the probes in ambient_sub/h.
std::vector<GroupVector> quotient_classes(const Subgroup& ambient_sub, const Subgroup& h,
                                          const std::vector<GroupVector>& probes);

} // namespace abcov
