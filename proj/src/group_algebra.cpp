#include "abcov/group_algebra.hpp"

#include <algorithm>

#include "abcov/words.hpp"

namespace abcov {

namespace {

std::size_t pow_size(int n, int k) {
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

} // namespace

GroupAlgebraElement::GroupAlgebraElement(int modulus, int dim)
    : n_(modulus), k_(dim), c_(pow_size(modulus, dim), Rational(0)) {}

GroupAlgebraElement GroupAlgebraElement::basis_element(const GroupVector& g) {
    GroupAlgebraElement e(g.modulus(), g.dim());
    e.c_[e.encode(g)] = 1;
    return e;
}

GroupAlgebraElement GroupAlgebraElement::unit(int modulus, int dim) {
    return basis_element(GroupVector::zero(modulus, dim));
}

std::size_t GroupAlgebraElement::encode(const GroupVector& g) const {
    if (g.modulus() != n_ || g.dim() != k_) throw dimension_error("group algebra: wrong ambient");
    std::size_t idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(g[i]);
    return idx;
}

GroupVector GroupAlgebraElement::decode(std::size_t index) const {
    std::vector<int> coords(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(n_));
        index /= static_cast<std::size_t>(n_);
    }
    return GroupVector(n_, std::move(coords));
}

const Rational& GroupAlgebraElement::coeff(const GroupVector& g) const { return c_[encode(g)]; }

void GroupAlgebraElement::set_coeff(const GroupVector& g, Rational value) { c_[encode(g)] = std::move(value); }

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw dimension_error("group algebra: mixed ambients");
    GroupAlgebraElement out(n_, k_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw dimension_error("group algebra: mixed ambients");
    GroupAlgebraElement out(n_, k_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw dimension_error("group algebra: mixed ambients");
    GroupAlgebraElement out(n_, k_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        GroupVector gi = decode(i);
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            std::size_t idx = encode(gi + o.decode(j));
            out.c_[idx] += c_[i] * o.c_[j];
        }
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& f) const {
    GroupAlgebraElement out(n_, k_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * f;
    return out;
}

GroupAlgebraElement GroupAlgebraElement::translated(const GroupVector& b) const {
    GroupAlgebraElement out(n_, k_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out.c_[encode(decode(i) + b)] = c_[i];
    }
    return out;
}

bool GroupAlgebraElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

SubgroupSum subgroup_sum(int modulus, int dim, const std::vector<GroupVector>& generators) {
    Subgroup sub = Subgroup::span(modulus, dim, generators);
    GroupAlgebraElement e(modulus, dim);
    for (const auto& h : sub.elements()) e.set_coeff(h, 1);
    return {std::move(sub), std::move(e)};
}

namespace {

const std::vector<std::string>& surface_names() {
    static const std::vector<std::string> names{"w1", "w2", "w3", "xi1", "xi2", "xi3"};
    return names;
}

// coordinates in the (w1,w2,w3,xi1,xi2) basis; xi3 = -xi1-xi2
const std::array<std::vector<int>, 6>& surface_coords() {
    static const std::array<std::vector<int>, 6> coords{{{1, 0, 0, 0, 0},
                                                         {0, 1, 0, 0, 0},
                                                         {0, 0, 1, 0, 0},
                                                         {0, 0, 0, 1, 0},
                                                         {0, 0, 0, 0, 1},
                                                         {0, 0, 0, 2, 2}}};
    return coords;
}

} // namespace

GroupVector parse_surface_word(const std::string& text) {
    Word w = parse_word(text, surface_names());
    GroupVector acc = GroupVector::zero(3, 5);
    for (const auto& [gen, exp] : w)
        acc = acc + GroupVector(3, surface_coords()[static_cast<std::size_t>(gen)]) * exp;
    return acc;
}

std::vector<std::array<std::string, 3>> quotient_list_words() {
    std::vector<std::array<std::string, 3>> out;
    struct Family {
        const char* fixed;
        const char* xi;
        const char* wj;
        const char* wk;
    };
    const Family families[] = {{"w1", "xi1", "w2", "w3"}, {"w1", "xi3", "w2", "w3"},
                               {"w2", "xi1", "w3", "w1"}, {"w2", "xi2", "w3", "w1"},
                               {"w3", "xi2", "w1", "w2"}, {"w3", "xi3", "w1", "w2"}};
    auto piece = [](const std::string& xi, int e, const std::string& w) {
        if (e == 0) return w;
        if (e == 1) return xi + "*" + w;
        return xi + "^" + std::to_string(e) + "*" + w;
    };
    for (const auto& f : families)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                out.push_back({f.fixed, piece(f.xi, i, f.wj), piece(f.xi, j, f.wk)});
    out.push_back({"xi3*w1", "xi2*w2", "xi2*w3"}); // the extra triple
    return out;
}

std::vector<SubgroupSum> quotient_list_sums() {
    std::vector<SubgroupSum> out;
    for (const auto& triple : quotient_list_words()) {
        std::vector<GroupVector> gens;
        for (const auto& t : triple) gens.push_back(parse_surface_word(t));
        out.push_back(subgroup_sum(3, 5, gens));
    }
    return out;
}

SubgroupSum canonical_target_sum() {
    std::vector<GroupVector> gens{parse_surface_word("w1*xi1"), parse_surface_word("w2*xi2"),
                                  parse_surface_word("w3*xi3")};
    return subgroup_sum(3, 5, gens);
}

MembershipResult ideal_membership(const GroupAlgebraElement& target,
                                  const std::vector<GroupAlgebraElement>& gens) {
    const std::size_t cols = target.basis_size();
    for (const auto& g : gens)
        if (g.basis_size() != cols || g.modulus() != target.modulus())
            throw dimension_error("ideal_membership: mixed group algebras");

    MembershipResult res;

    // translates of a generator by two elements coincide exactly when the
    // elements differ by the generator's translation stabiliser, so one
    // row per stabiliser coset spans the same space as all n^k translates
    const int n = target.modulus();
    const int k = target.dim();
    auto add_idx = [n, k](std::size_t x, std::size_t y) {
        std::size_t out = 0, mult = 1;
        for (int d = 0; d < k; ++d) {
            out += ((x % static_cast<std::size_t>(n)) + (y % static_cast<std::size_t>(n))) %
                   static_cast<std::size_t>(n) * mult;
            x /= static_cast<std::size_t>(n);
            y /= static_cast<std::size_t>(n);
            mult *= static_cast<std::size_t>(n);
        }
        return out;
    };
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        const auto& c = g.dense();
        std::vector<std::size_t> stab;
        for (std::size_t b = 0; b < cols; ++b) {
            bool fixes = true;
            for (std::size_t x = 0; x < cols; ++x)
                if (c[add_idx(x, b)] != c[x]) {
                    fixes = false;
                    break;
                }
            if (fixes) stab.push_back(b);
        }
        std::vector<char> covered(cols, 0);
        for (std::size_t b = 0; b < cols; ++b) {
            if (covered[b]) continue;
            rows.push_back(g.translated(g.decode(b)).dense());
            for (std::size_t s : stab) covered[add_idx(b, s)] = 1;
        }
    }
    res.distinct_rows = rows.size();

    // exact incremental echelon, pivots normalised to 1
    std::vector<std::pair<std::size_t, std::vector<Rational>>> pivots;
    auto reduce = [&](std::vector<Rational>& row) {
        for (const auto& [col, prow] : pivots) {
            if (row[col] == 0) continue;
            Rational f = row[col];
            for (std::size_t j = col; j < cols; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
        }
    };
    for (auto& row : rows) {
        reduce(row);
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j] != 0) {
                lead = j;
                break;
            }
        if (lead == cols) continue;
        Rational inv = Rational(1) / row[lead];
        for (std::size_t j = lead; j < cols; ++j)
            if (row[j] != 0) row[j] *= inv;
        pivots.emplace_back(lead, std::move(row));
        std::sort(pivots.begin(), pivots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    res.rank = static_cast<long long>(pivots.size());

    std::vector<Rational> t = target.dense();
    reduce(t);
    res.member = std::all_of(t.begin(), t.end(), [](const Rational& x) { return x == 0; });
    return res;
}

} // namespace abcov
