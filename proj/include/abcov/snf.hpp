#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace abcov {

using Int = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
Int mat_det(IntMat m); // fraction-free elimination, exact

struct SnfResult {
    std::vector<Int> diag; // d1 | d2 | ... | dr >= 0, trailing zeros dropped
    IntMat u;              // rows x rows, unimodular
    IntMat v;              // cols x cols, unimodular
};

/// U * m * V is diagonal with the returned entries in divisor-chain order.
SnfResult smith_normal_form(const IntMat& m);

/// Invariant-factor view of coker(m^T): the abelian group on `cols`
/// generators with one relation per row.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion; // factors > 1, divisor chain
    bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants cokernel_invariants(const IntMat& relations, std::size_t num_generators);

} // namespace abcov
