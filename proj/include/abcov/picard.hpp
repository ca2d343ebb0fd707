#pragma once

#include <span>
#include <string>
#include <vector>

#include "abcov/errors.hpp"

namespace abcov {

/// Divisor class d*H - sum_i m_i E_i on a blow-up of the plane, stored as
/// the signed coefficient vector [d, m_1, ..., m_r].
class DivisorClass {
public:
    explicit DivisorClass(std::vector<long long> coeffs);
    static DivisorClass zero(int r);

    int r() const { return static_cast<int>(c_.size()) - 1; }
    long long degree() const { return c_[0]; }
    long long mult(int i) const { return c_[static_cast<std::size_t>(i)]; } // 1-based
    const std::vector<long long>& coeffs() const { return c_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(long long scalar) const;
    bool is_zero() const;

    /// Same class viewed on the lattice with one more blow-up.
    DivisorClass extended() const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    std::vector<long long> c_;
};

/// Intersection number under H^2 = 1, E_i.E_j = -delta_ij, H.E_i = 0.
long long intersect(const DivisorClass& a, const DivisorClass& b);

/// Pic of the blow-up of the plane in r general points, with the
/// (-1)-curve list used for effective-cone reduction. Exercised for
/// r <= 3 (degree >= 6 del Pezzo).
class PicLattice {
public:
    explicit PicLattice(int r);

    int r() const { return r_; }
    DivisorClass hyperplane() const;
    DivisorClass exceptional(int i) const; // 1-based
    DivisorClass canonical() const;        // -3H + sum E_i
    const std::vector<DivisorClass>& negative_curves() const { return neg_; }

    long long chi(const DivisorClass& d) const; // 1 + D(D-K)/2
    long long h0(const DivisorClass& d) const;
    long long h1(const DivisorClass& d) const;
    long long h2(const DivisorClass& d) const;

    /// Euler characteristic of the rank-2 log sheaf Omega(log C_1,...,C_k)(A)
    /// for disjoint-or-normal-crossing smooth rational components, via the
    /// residue sequence: chi(Omega(A)) + sum_i (1 + A.C_i).
    long long chi_log_rank2(const DivisorClass& a, std::span<const DivisorClass> components) const;

    std::string pretty(const DivisorClass& d) const; // "2H - E2 - E3"

private:
    int r_;
    std::vector<DivisorClass> neg_;
};

} // namespace abcov
