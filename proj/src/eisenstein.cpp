#include "abcov/eisenstein.hpp"

#include <algorithm>

namespace abcov {

EisScaled EisScaled::rotated(int j) const {
    int r = ((j % 3) + 3) % 3;
    switch (r) {
        case 0: return *this;
        case 1: return {-b, a - b};      // (a+bw)w = -b + (a-b)w
        default: return {b - a, -a};     // (a+bw)w^2
    }
}

EisScaled EisScaled::times_integral(long long p, long long q) const {
    // (a+bw)(p+qw) = ap - bq + (aq + bp - bq) w
    return {a * p - b * q, a * q + b * p - b * q};
}

AffineMap AffineMap::after(const AffineMap& inner) const {
    AffineMap out;
    for (int i = 0; i < 3; ++i) {
        out.rot[static_cast<std::size_t>(i)] =
            (rot[static_cast<std::size_t>(i)] + inner.rot[static_cast<std::size_t>(i)]) % 3;
        out.tr[static_cast<std::size_t>(i)] =
            inner.tr[static_cast<std::size_t>(i)].rotated(rot[static_cast<std::size_t>(i)]) +
            tr[static_cast<std::size_t>(i)];
    }
    return out;
}

AffineMap AffineMap::inverse() const {
    AffineMap out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.rot[i] = (3 - rot[i] % 3) % 3;
        out.tr[i] = (-tr[i]).rotated(static_cast<int>(out.rot[i]));
    }
    return out;
}

AffineMap AffineMap::power(int e) const {
    AffineMap base = e >= 0 ? *this : inverse();
    int count = e >= 0 ? e : -e;
    AffineMap acc = identity();
    for (int i = 0; i < count; ++i) acc = acc.after(base);
    return acc;
}

EisPoint AffineMap::apply(const EisPoint& z) const {
    EisPoint out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = z[i].rotated(static_cast<int>(rot[i])) + tr[i];
    return out;
}

bool AffineMap::lattice_equal(const AffineMap& o) const {
    for (std::size_t i = 0; i < 3; ++i) {
        if (rot[i] % 3 != o.rot[i] % 3) return false;
        if (!tr[i].lattice_equal(o.tr[i])) return false;
    }
    return true;
}

bool AffineMap::is_identity_on_torus() const { return lattice_equal(identity()); }

const EisGenerators& make_generators() {
    static const EisGenerators gens = [] {
        EisGenerators g;
        const EisScaled eta = EisScaled::eta();
        const EisScaled eta2 = EisScaled::two_eta();
        const EisScaled zero{};
        g.gamma[0] = AffineMap{{0, 1, 0}, {zero, eta2, eta}};
        g.gamma[1] = AffineMap{{0, 0, 1}, {eta, zero, eta2}};
        g.gamma[2] = AffineMap{{1, 0, 0}, {eta2, eta, zero}};
        for (std::size_t i = 0; i < 3; ++i) {
            AffineMap t;
            t.tr[i] = EisScaled::integer(1);
            g.t[i] = t;
            AffineMap tp;
            tp.tr[i] = EisScaled::omega();
            g.tp[i] = tp;
        }
        return g;
    }();
    return gens;
}

const std::vector<std::string>& gamma_generator_names() {
    static const std::vector<std::string> names{"g1", "g2", "g3", "t1", "t2", "t3", "tp1", "tp2", "tp3"};
    return names;
}

namespace {

const AffineMap& generator_map(int idx) {
    const auto& g = make_generators();
    if (idx < 3) return g.gamma[static_cast<std::size_t>(idx)];
    if (idx < 6) return g.t[static_cast<std::size_t>(idx - 3)];
    return g.tp[static_cast<std::size_t>(idx - 6)];
}

} // namespace

AffineMap evaluate_word(const Word& w) {
    AffineMap acc = AffineMap::identity();
    for (const auto& [gen, exp] : w) acc = acc.after(generator_map(gen).power(exp));
    return acc;
}

Word parse_gamma_word(const std::string& text) {
    static const std::map<std::string, std::string> aliases{
        {"gamma1", "g1"}, {"gamma2", "g2"}, {"gamma3", "g3"}};
    return parse_word(text, gamma_generator_names(), &aliases);
}

AffineMap evaluate_word(const std::string& text) { return evaluate_word(parse_gamma_word(text)); }

bool verify_relation(const std::string& lhs, const std::string& rhs, bool mod_lattice) {
    AffineMap l = evaluate_word(lhs);
    AffineMap r = evaluate_word(rhs);
    return mod_lattice ? l.lattice_equal(r) : l == r;
}

FixedLocus fixed_locus(const AffineMap& m) {
    FixedLocus out;
    long long count = 1;
    bool infinite = false;
    bool all_everything = true;
    for (std::size_t i = 0; i < 3; ++i) {
        int j = ((m.rot[i] % 3) + 3) % 3;
        const EisScaled& b = m.tr[i];
        if (j == 0) {
            if (!b.in_lattice()) {
                out.kind = FixedLocus::Kind::empty;
                out.count = 0;
                return out;
            }
            infinite = true; // entire coordinate is fixed
            out.witness[i] = EisScaled{};
        } else {
            all_everything = false;
            // solve (1 - w^j) z = b mod lattice over the nine 1/3-lattice residues
            EisScaled one_minus = EisScaled::integer(1) - EisScaled{3, 0}.rotated(j);
            // one_minus has scale-3 numerators (3 - 3w^j)/3 = 1 - w^j scaled by 3/3
            long long p = one_minus.a / 3, q = one_minus.b / 3; // exact: 1 - w^j is integral
            int found = 0;
            EisScaled first{};
            for (long long u = 0; u < 3; ++u)
                for (long long v = 0; v < 3; ++v) {
                    EisScaled z{u, v};
                    EisScaled lhs = z.times_integral(p, q);
                    if (lhs.lattice_equal(b)) {
                        if (found == 0) first = z;
                        ++found;
                    }
                }
            if (found == 0)
                throw consistency_error(
                    "fixed_locus: rotational coordinate with no 1/3-lattice solution; "
                    "translation outside the eta-multiple family");
            count *= found;
            out.witness[i] = first;
        }
    }
    if (all_everything) {
        out.kind = FixedLocus::Kind::everything;
        out.count = -1;
        return out;
    }
    out.kind = FixedLocus::Kind::points;
    out.count = infinite ? -1 : count;
    return out;
}

std::vector<TorusClass> torus_action_classes() {
    const auto& g = make_generators();
    std::vector<TorusClass> out;
    out.reserve(27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                AffineMap m = g.gamma[0].power(a).after(g.gamma[1].power(b)).after(g.gamma[2].power(c));
                out.push_back({{a, b, c}, m});
            }
    return out;
}

std::vector<std::size_t> stabilizer(const EisPoint& point, const std::vector<AffineMap>& group) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < group.size(); ++i) {
        EisPoint image = group[i].apply(point);
        bool fixes = true;
        for (std::size_t c = 0; c < 3; ++c)
            if (!image[c].lattice_equal(point[c])) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(i);
    }
    return out;
}

std::vector<ConjugationEntry> conjugation_table() {
    const auto& names = gamma_generator_names();
    std::vector<ConjugationEntry> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (bool primed : {false, true}) {
                std::string tname = (primed ? "tp" : "t") + std::to_string(j);
                std::string gname = "g" + std::to_string(i);
                AffineMap conj = evaluate_word(gname + " " + tname + " " + gname + "^-1");
                // a conjugated translation is still a translation
                if (conj.rot != std::array<int, 3>{0, 0, 0})
                    throw consistency_error("conjugated translation has a nontrivial linear part");
                const EisScaled& v = conj.tr[static_cast<std::size_t>(j - 1)];
                if (v.a % 3 != 0 || v.b % 3 != 0)
                    throw consistency_error("conjugated translation is not integral");
                long long p = v.a / 3, q = v.b / 3;
                Word word;
                auto tpos = [&](const std::string& n) {
                    return static_cast<int>(std::find(names.begin(), names.end(), n) - names.begin());
                };
                if (p != 0) word.emplace_back(tpos("t" + std::to_string(j)), static_cast<int>(p));
                if (q != 0) word.emplace_back(tpos("tp" + std::to_string(j)), static_cast<int>(q));
                std::string text = word_to_string(word, names);
                if (!(evaluate_word(text) == conj))
                    throw consistency_error("conjugation table entry failed affine verification");
                out.push_back({i, j, primed, text});
            }
    return out;
}

} // namespace abcov
