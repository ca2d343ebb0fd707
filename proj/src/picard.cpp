#include "abcov/picard.hpp"

#include <algorithm>
#include <cstdlib>

namespace abcov {

DivisorClass::DivisorClass(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw dimension_error("DivisorClass needs at least the H coefficient");
}

DivisorClass DivisorClass::zero(int r) {
    return DivisorClass(std::vector<long long>(static_cast<std::size_t>(r) + 1, 0));
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (c_.size() != o.c_.size()) throw dimension_error("divisor lattice mismatch");
    std::vector<long long> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + o.c_[i];
    return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const {
    std::vector<long long> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator*(long long scalar) const {
    std::vector<long long> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = scalar * c_[i];
    return DivisorClass(std::move(out));
}

bool DivisorClass::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
}

DivisorClass DivisorClass::extended() const {
    auto out = c_;
    out.push_back(0);
    return DivisorClass(std::move(out));
}

long long intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.r() != b.r()) throw dimension_error("intersection: divisor lattice mismatch");
    long long acc = a.degree() * b.degree();
    for (int i = 1; i <= a.r(); ++i) acc -= a.mult(i) * b.mult(i);
    return acc;
}

PicLattice::PicLattice(int r) : r_(r) {
    if (r < 0 || r > 3) throw dimension_error("PicLattice supports 0 <= r <= 3 blow-ups");
    for (int i = 1; i <= r; ++i) neg_.push_back(exceptional(i));
    // strict transforms of lines through two of the points
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            std::vector<long long> c(static_cast<std::size_t>(r) + 1, 0);
            c[0] = 1;
            c[static_cast<std::size_t>(i)] = 1;
            c[static_cast<std::size_t>(j)] = 1;
            neg_.emplace_back(std::move(c));
        }
}

DivisorClass PicLattice::hyperplane() const {
    std::vector<long long> c(static_cast<std::size_t>(r_) + 1, 0);
    c[0] = 1;
    return DivisorClass(std::move(c));
}

DivisorClass PicLattice::exceptional(int i) const {
    if (i < 1 || i > r_) throw dimension_error("exceptional index out of range");
    std::vector<long long> c(static_cast<std::size_t>(r_) + 1, 0);
    c[static_cast<std::size_t>(i)] = -1;
    return DivisorClass(std::move(c));
}

DivisorClass PicLattice::canonical() const {
    std::vector<long long> c(static_cast<std::size_t>(r_) + 1, -1);
    c[0] = -3;
    return DivisorClass(std::move(c));
}

long long PicLattice::chi(const DivisorClass& d) const {
    long long v = intersect(d, d - canonical());
    if (v % 2 != 0) throw consistency_error("chi: odd D(D-K) on a smooth surface lattice");
    return 1 + v / 2;
}

long long PicLattice::h0(const DivisorClass& d) const {
    DivisorClass cur = d;
    if (cur.is_zero()) return 1;
    const DivisorClass minus_k = -canonical();
    long long guard = 10 * std::llabs(intersect(cur, minus_k)) + 10;
    for (long long step = 0; step <= guard; ++step) {
        if (intersect(cur, minus_k) < 0) return 0;
        const DivisorClass* fixed = nullptr;
        long long pairing = 0;
        for (const auto& c : neg_) {
            pairing = intersect(cur, c);
            if (pairing < 0) {
                fixed = &c;
                break;
            }
        }
        if (fixed == nullptr) return chi(cur); // nef part reached
        cur = cur + (*fixed) * pairing;        // subtract (-D.C) copies of C
        if (cur.is_zero()) return 1;
    }
    throw consistency_error("h0 reduction exceeded its iteration bound");
}

long long PicLattice::h2(const DivisorClass& d) const { return h0(canonical() - d); }

long long PicLattice::h1(const DivisorClass& d) const { return h0(d) + h2(d) - chi(d); }

long long PicLattice::chi_log_rank2(const DivisorClass& a, std::span<const DivisorClass> components) const {
    const DivisorClass k = canonical();
    const long long c2_omega = 3 + r_; // Euler number of the surface
    DivisorClass c1 = k + a * 2;
    long long c2 = c2_omega + intersect(k, a) + intersect(a, a);
    long long twice = intersect(c1, c1 - k);
    if (twice % 2 != 0) throw consistency_error("chi_log_rank2: odd c1(c1-K)");
    long long value = 2 + twice / 2 - c2;
    for (const auto& comp : components) value += 1 + intersect(a, comp);
    return value;
}

std::string PicLattice::pretty(const DivisorClass& d) const {
    std::string out;
    auto append = [&](long long coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (out.empty()) {
            if (coeff == -1)
                out += "-";
            else if (coeff != 1)
                out += std::to_string(coeff);
        } else {
            out += coeff < 0 ? " - " : " + ";
            long long a = std::llabs(coeff);
            if (a != 1) out += std::to_string(a);
        }
        out += sym;
    };
    append(d.degree(), "H");
    for (int i = 1; i <= d.r(); ++i) append(-d.mult(i), "E" + std::to_string(i));
    return out.empty() ? "0" : out;
}

} // namespace abcov
