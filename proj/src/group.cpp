#include "abcov/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace abcov {

namespace {

int mod(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

GroupVector::GroupVector(int modulus, std::vector<int> coords) : n_(modulus), c_(std::move(coords)) {
    if (n_ < 2) throw dimension_error("modulus must be >= 2");
    for (auto& x : c_) x = mod(x, n_);
}

GroupVector GroupVector::zero(int modulus, int dim) {
    return GroupVector(modulus, std::vector<int>(static_cast<std::size_t>(dim), 0));
}

GroupVector GroupVector::operator+(const GroupVector& o) const {
    if (n_ != o.n_ || c_.size() != o.c_.size())
        throw dimension_error("GroupVector ambient mismatch");
    std::vector<int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(c_[i] + o.c_[i], n_);
    return GroupVector(n_, std::move(out));
}

GroupVector GroupVector::operator-() const {
    std::vector<int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(-c_[i], n_);
    return GroupVector(n_, std::move(out));
}

GroupVector GroupVector::operator*(int scalar) const {
    std::vector<int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(scalar * c_[i], n_);
    return GroupVector(n_, std::move(out));
}

bool GroupVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

int GroupVector::order() const {
    int d = 1;
    for (int x : c_) {
        int ord = n_ / std::gcd(x, n_);
        d = std::lcm(d, ord);
    }
    return d;
}

GroupHom::GroupHom(int modulus, std::vector<std::vector<int>> rows) : n_(modulus), rows_(std::move(rows)) {
    if (rows_.empty()) throw dimension_error("GroupHom needs at least one row");
    src_ = static_cast<int>(rows_[0].size());
    for (auto& r : rows_) {
        if (static_cast<int>(r.size()) != src_) throw dimension_error("ragged GroupHom matrix");
        for (auto& x : r) x = mod(x, n_);
    }
}

GroupHom GroupHom::zero(int modulus, int src_dim, int dst_dim) {
    return GroupHom(modulus, std::vector<std::vector<int>>(static_cast<std::size_t>(dst_dim),
                                                           std::vector<int>(static_cast<std::size_t>(src_dim), 0)));
}

GroupVector GroupHom::apply(const GroupVector& v) const {
    if (v.modulus() != n_ || v.dim() != src_) throw dimension_error("GroupHom applied to wrong ambient");
    std::vector<int> out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        long long acc = 0;
        for (int j = 0; j < src_; ++j) acc += static_cast<long long>(rows_[i][static_cast<std::size_t>(j)]) * v[j];
        out[i] = mod(static_cast<int>(acc % n_), n_);
    }
    return GroupVector(n_, std::move(out));
}

GroupVector GroupHom::column(int j) const {
    std::vector<int> out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i][static_cast<std::size_t>(j)];
    return GroupVector(n_, std::move(out));
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (inner.n_ != n_ || inner.dst_dim() != src_) throw dimension_error("GroupHom composition mismatch");
    std::vector<std::vector<int>> out(rows_.size(), std::vector<int>(static_cast<std::size_t>(inner.src_), 0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < inner.src_; ++j) {
            long long acc = 0;
            for (int t = 0; t < src_; ++t)
                acc += static_cast<long long>(rows_[i][static_cast<std::size_t>(t)]) *
                       inner.rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            out[i][static_cast<std::size_t>(j)] = mod(static_cast<int>(acc % n_), n_);
        }
    return GroupHom(n_, std::move(out));
}

int matrix_rank_mod_n(const GroupHom& h) {
    int n = h.modulus();
    if (!is_prime(n))
        throw std::invalid_argument("matrix rank needs a prime modulus, got " + std::to_string(n));
    auto m = h.rows();
    int rows = static_cast<int>(m.size());
    int cols = h.src_dim();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % n != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
        // scale pivot row to 1
        int p = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        int inv = 1;
        for (int x = 1; x < n; ++x)
            if (x * p % n == 1) { inv = x; break; }
        for (int j = c; j < cols; ++j) {
            auto& v = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            v = mod(v * inv, n);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                v = mod(v - f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], n);
            }
        }
        ++rank;
    }
    return rank;
}

Subgroup Subgroup::span(int modulus, int dim, const std::vector<GroupVector>& generators) {
    for (const auto& g : generators)
        if (g.modulus() != modulus || g.dim() != dim)
            throw dimension_error("span: generator in wrong ambient");
    Subgroup s;
    s.n_ = modulus;
    s.k_ = dim;
    s.gens_ = generators;

    std::set<GroupVector> elems;
    GroupVector zero = GroupVector::zero(modulus, dim);
    elems.insert(zero);
    std::vector<GroupVector> frontier{zero};
    while (!frontier.empty()) {
        std::vector<GroupVector> next;
        for (const auto& e : frontier)
            for (const auto& g : generators) {
                GroupVector sum = e + g;
                if (elems.insert(sum).second) next.push_back(sum);
            }
        frontier = std::move(next);
    }
    s.elements_.assign(elems.begin(), elems.end());
    s.lookup_ = std::move(elems);

    // reduced generating set: greedy over the given generators
    std::set<GroupVector> have;
    have.insert(zero);
    std::size_t have_order = 1;
    for (const auto& g : generators) {
        if (have.count(g)) continue;
        s.basis_.push_back(g);
        // close under addition with g
        std::vector<GroupVector> fr(have.begin(), have.end());
        while (!fr.empty()) {
            std::vector<GroupVector> nx;
            for (const auto& e : fr) {
                GroupVector sum = e + g;
                if (have.insert(sum).second) nx.push_back(sum);
            }
            fr = std::move(nx);
        }
        have_order = have.size();
        if (have_order == s.elements_.size()) break;
    }
    return s;
}

bool Subgroup::contains(const GroupVector& v) const {
    if (v.modulus() != n_ || v.dim() != k_) throw dimension_error("contains: wrong ambient");
    return lookup_.count(v) > 0;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    if (other.n_ != n_ || other.k_ != k_) throw dimension_error("contains_subgroup: wrong ambient");
    return std::all_of(other.elements_.begin(), other.elements_.end(),
                       [&](const GroupVector& v) { return lookup_.count(v) > 0; });
}

bool Subgroup::operator==(const Subgroup& other) const {
    return n_ == other.n_ && k_ == other.k_ && elements_ == other.elements_;
}

Subgroup kernel_image_intersect(const GroupHom& h, const Subgroup& s) {
    if (h.modulus() != s.modulus() || h.src_dim() != s.dim())
        throw dimension_error("kernel_image_intersect: hom not defined on the subgroup ambient");
    std::vector<GroupVector> kept;
    for (const auto& e : s.elements())
        if (h.apply(e).is_zero()) kept.push_back(e);
    return Subgroup::span(s.modulus(), s.dim(), kept);
}

Character::Character(GroupVector dual) : dual_(std::move(dual)) {}

int Character::pair(const GroupVector& g) const {
    if (g.modulus() != modulus() || g.dim() != dim()) throw dimension_error("pairing ambient mismatch");
    long long acc = 0;
    for (int i = 0; i < dim(); ++i) acc += static_cast<long long>(dual_[i]) * g[i];
    return static_cast<int>(acc % modulus());
}

int Character::value_mod_d(const GroupVector& g) const {
    int d = order();
    if (d == 1) return 0;
    int step = modulus() / d;
    int v = pair(g);
    if (v % step != 0)
        throw consistency_error("pairing value not in the image subgroup of the character");
    return v / step;
}

Character Character::inverse() const { return Character(-dual_); }

QuotientMap::QuotientMap(const Subgroup& ambient_sub, const Subgroup& h) : n_(ambient_sub.modulus()) {
    if (!ambient_sub.contains_subgroup(h)) throw membership_error("quotient: h is not contained in the ambient subgroup");

    // pick quotient basis greedily from the sorted elements of the ambient subgroup
    std::set<GroupVector> spanned(h.elements().begin(), h.elements().end());
    std::vector<GroupVector> gens = h.generators();
    for (const auto& e : ambient_sub.elements()) {
        if (spanned.count(e)) continue;
        basis_.push_back(e);
        gens.push_back(e);
        Subgroup bigger = Subgroup::span(ambient_sub.modulus(), ambient_sub.dim(), gens);
        spanned = std::set<GroupVector>(bigger.elements().begin(), bigger.elements().end());
        if (spanned.size() == ambient_sub.order()) break;
    }
    q_ = static_cast<int>(basis_.size());

    // tabulate every element's coset coordinates
    std::vector<std::pair<GroupVector, GroupVector>> tab;
    std::vector<int> idx(static_cast<std::size_t>(q_), 0);
    bool done = q_ == 0;
    while (true) {
        GroupVector rep = GroupVector::zero(n_, ambient_sub.dim());
        for (int i = 0; i < q_; ++i) rep = rep + basis_[static_cast<std::size_t>(i)] * idx[static_cast<std::size_t>(i)];
        GroupVector coords(n_, idx);
        for (const auto& hh : h.elements()) tab.emplace_back(rep + hh, coords);
        if (done) break;
        int i = 0;
        while (i < q_) {
            if (++idx[static_cast<std::size_t>(i)] < n_) break;
            idx[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == q_) break;
    }
    std::sort(tab.begin(), tab.end());
    table_ = std::move(tab);
}

GroupVector QuotientMap::project(const GroupVector& v) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), v,
                               [](const auto& entry, const GroupVector& key) { return entry.first < key; });
    if (it == table_.end() || it->first != v)
        throw membership_error("quotient projection: element not in the ambient subgroup");
    return it->second;
}

std::vector<GroupVector> quotient_classes(const Subgroup& ambient_sub, const Subgroup& h,
                                          const std::vector<GroupVector>& probes) {
    QuotientMap q(ambient_sub, h);
    std::vector<GroupVector> out;
    out.reserve(probes.size());
    for (const auto& p : probes) out.push_back(q.project(p));
    return out;
}

} // namespace abcov
