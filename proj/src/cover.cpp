#include "abcov/cover.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

namespace abcov {

using Rational = boost::multiprecision::cpp_rational;

CoverSpec::CoverSpec(std::string name, int modulus, int ambient_dim, PicLattice lattice,
                     std::vector<BranchComponent> components, std::vector<IncidencePoint> incidences)
    : name_(std::move(name)),
      n_(modulus),
      k_(ambient_dim),
      lattice_(std::move(lattice)),
      components_(std::move(components)),
      incidences_(std::move(incidences)) {
    std::set<std::string> names;
    for (const auto& c : components_) {
        if (!names.insert(c.name).second) throw config_error("duplicate component name: " + c.name);
        if (c.phi.modulus() != n_ || c.phi.dim() != k_)
            throw config_error("component value in wrong ambient: " + c.name);
        if (c.cls.r() != lattice_.r()) throw config_error("component class on wrong lattice: " + c.name);
    }
    for (const auto& p : incidences_) {
        if (p.components.size() < 2)
            throw config_error("incidence point needs at least two components: " + p.name);
        for (const auto& cname : p.components)
            if (!names.count(cname))
                throw config_error("incidence point " + p.name + " references unknown component " + cname);
    }
}

const BranchComponent& CoverSpec::component(const std::string& name) const {
    for (const auto& c : components_)
        if (c.name == name) return c;
    throw config_error("unknown component: " + name);
}

bool CoverSpec::has_incidence(const std::string& name) const {
    return std::any_of(incidences_.begin(), incidences_.end(),
                       [&](const IncidencePoint& p) { return p.name == name; });
}

const Subgroup& CoverSpec::group() const {
    if (!group_) {
        std::vector<GroupVector> values;
        for (const auto& c : components_) values.push_back(c.phi);
        group_ = Subgroup::span(n_, k_, values);
    }
    return *group_;
}

std::vector<Character> CoverSpec::characters() const {
    const Subgroup& g = group();
    std::vector<Character> out;
    std::set<std::vector<int>> signatures;
    std::vector<int> idx(static_cast<std::size_t>(k_), 0);
    while (true) {
        GroupVector dual(n_, idx);
        Character chi(dual);
        std::vector<int> sig;
        for (const auto& b : g.basis()) sig.push_back(chi.pair(b));
        if (signatures.insert(sig).second) out.push_back(chi);
        int i = k_ - 1;
        while (i >= 0) {
            if (++idx[static_cast<std::size_t>(i)] < n_) break;
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

DivisorClass CoverSpec::total_branch_class() const {
    DivisorClass acc = DivisorClass::zero(lattice_.r());
    for (const auto& c : components_)
        if (!c.unramified()) acc = acc + c.cls;
    return acc;
}

nlohmann::json CoverSpec::expected() const {
    if (expected_raw_.empty()) return nlohmann::json();
    return nlohmann::json::parse(expected_raw_);
}

CoverSpec CoverSpec::from_json(const nlohmann::json& j) {
    int n = j.at("group").at("modulus").get<int>();
    int k = j.at("group").at("rank").get<int>();
    int r = j.value("blowups", 0);
    std::vector<BranchComponent> comps;
    for (const auto& cj : j.at("components")) {
        auto cls = cj.at("class").get<std::vector<long long>>();
        auto phi = cj.at("phi").get<std::vector<int>>();
        comps.push_back({cj.at("name").get<std::string>(), DivisorClass(std::move(cls)), GroupVector(n, std::move(phi))});
    }
    std::vector<IncidencePoint> incs;
    for (const auto& pj : j.at("incidences"))
        incs.push_back({pj.at("name").get<std::string>(), pj.at("components").get<std::vector<std::string>>(),
                        pj.value("on_exceptional", false)});
    CoverSpec spec(j.value("name", std::string("cover")), n, k, PicLattice(r), std::move(comps), std::move(incs));
    if (j.contains("blow_up")) spec.blow_up_directives = j.at("blow_up").get<std::vector<std::string>>();
    if (j.contains("expected")) spec.expected_raw_ = j.at("expected").dump();
    return spec;
}

CoverSpec CoverSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("bad config json in " + path + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::json CoverSpec::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["group"] = {{"modulus", n_}, {"rank", k_}};
    j["blowups"] = lattice_.r();
    auto comps = nlohmann::json::array();
    for (const auto& c : components_)
        comps.push_back({{"name", c.name}, {"class", c.cls.coeffs()}, {"phi", c.phi.coords()}});
    j["components"] = comps;
    auto incs = nlohmann::json::array();
    for (const auto& p : incidences_) {
        nlohmann::json pj{{"name", p.name}, {"components", p.components}};
        if (p.on_exceptional) pj["on_exceptional"] = true;
        incs.push_back(pj);
    }
    j["incidences"] = incs;
    if (!blow_up_directives.empty()) j["blow_up"] = blow_up_directives;
    if (!expected_raw_.empty()) j["expected"] = nlohmann::json::parse(expected_raw_);
    return j;
}

std::vector<PointVerdict> smoothness_report(const CoverSpec& spec) {
    std::vector<PointVerdict> out;
    for (const auto& p : spec.incidences()) {
        std::vector<const BranchComponent*> ramified;
        for (const auto& cname : p.components) {
            const auto& c = spec.component(cname);
            if (!c.unramified()) ramified.push_back(&c);
        }
        PointVerdict v{p.name, true, ""};
        if (ramified.size() <= 1) {
            v.reason = "at most one branch component through the point";
        } else if (ramified.size() >= 3) {
            v.smooth = false;
            v.reason = "triple point: " + std::to_string(ramified.size()) + " branch components meet";
        } else {
            const GroupVector& a = ramified[0]->phi;
            const GroupVector& b = ramified[1]->phi;
            auto sa = Subgroup::span(spec.modulus(), spec.ambient_dim(), {a});
            auto sb = Subgroup::span(spec.modulus(), spec.ambient_dim(), {b});
            auto sab = Subgroup::span(spec.modulus(), spec.ambient_dim(), {a, b});
            if (sab.order() == sa.order() * sb.order()) {
                v.reason = "two transverse branches with independent values";
            } else {
                v.smooth = false;
                v.reason = "branch values fail the direct-sum condition";
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::string> singular_points(const std::vector<PointVerdict>& verdicts) {
    std::vector<std::string> out;
    for (const auto& v : verdicts)
        if (!v.smooth) out.push_back(v.point);
    return out;
}

CoverSpec blowup_extend(const CoverSpec& spec, const std::string& point_name) {
    auto it = std::find_if(spec.incidences_.begin(), spec.incidences_.end(),
                           [&](const IncidencePoint& p) { return p.name == point_name; });
    if (it == spec.incidences_.end()) {
        if (std::find(spec.blown_.begin(), spec.blown_.end(), point_name) != spec.blown_.end())
            throw config_error("point already blown up: " + point_name);
        throw config_error("unknown incidence point: " + point_name);
    }
    const IncidencePoint point = *it;

    int new_r = spec.lattice_.r() + 1;
    PicLattice lattice(new_r);

    std::string ename;
    if (point_name.size() > 1 && point_name[0] == 'P' &&
        std::all_of(point_name.begin() + 1, point_name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        ename = "E" + point_name.substr(1);
    else
        ename = "E(" + point_name + ")";

    std::vector<BranchComponent> comps;
    GroupVector esum = GroupVector::zero(spec.n_, spec.k_);
    for (const auto& c : spec.components_) {
        DivisorClass cls = c.cls.extended();
        if (std::find(point.components.begin(), point.components.end(), c.name) != point.components.end()) {
            auto coeffs = cls.coeffs();
            coeffs.back() += 1; // strict transform: subtract the exceptional class
            cls = DivisorClass(std::move(coeffs));
            esum = esum + c.phi;
        }
        comps.push_back({c.name, std::move(cls), c.phi});
    }
    std::vector<long long> ecoeffs(static_cast<std::size_t>(new_r) + 1, 0);
    ecoeffs.back() = -1;
    comps.push_back({ename, DivisorClass(std::move(ecoeffs)), esum});

    std::vector<IncidencePoint> incs;
    for (const auto& p : spec.incidences_)
        if (p.name != point_name) incs.push_back(p);
    for (const auto& cname : point.components)
        incs.push_back({ename + "*" + cname, {ename, cname}, true});

    CoverSpec out(spec.name_, spec.n_, spec.k_, std::move(lattice), std::move(comps), std::move(incs));
    out.blow_up_directives = spec.blow_up_directives;
    out.expected_raw_ = spec.expected_raw_;
    out.blown_ = spec.blown_;
    out.blown_.push_back(point_name);
    return out;
}

CoverSpec apply_blow_ups(const CoverSpec& spec) {
    CoverSpec cur = spec;
    for (const auto& p : spec.blow_up_directives) cur = blowup_extend(cur, p);
    return cur;
}

DivisorClass eigensheaf(const CoverSpec& spec, const Character& chi) {
    const int n = spec.modulus();
    DivisorClass acc = DivisorClass::zero(spec.lattice().r());
    for (const auto& c : spec.components()) {
        if (c.unramified()) continue;
        acc = acc + c.cls * chi.pair(c.phi);
    }
    std::vector<long long> coeffs = acc.coeffs();
    for (auto& x : coeffs) {
        if (x % n != 0) throw consistency_error("inconsistent cover: eigensheaf sum not divisible by the group exponent");
        x /= n;
    }
    return DivisorClass(std::move(coeffs));
}

SurfaceInvariants invariants(const CoverSpec& spec) {
    auto verdicts = smoothness_report(spec);
    auto singular = singular_points(verdicts);
    if (!singular.empty()) {
        std::string msg = "invariants need a smooth cover; singular over:";
        for (const auto& s : singular) msg += " " + s;
        throw precondition_error(msg);
    }

    const PicLattice& lat = spec.lattice();
    const DivisorClass k = lat.canonical();
    const long long order = static_cast<long long>(spec.group().order());

    // K^2 = |G| (K_Y + sum (1 - 1/d_i) Delta_i)^2, evaluated in exact rationals
    std::vector<Rational> s(k.coeffs().begin(), k.coeffs().end());
    for (const auto& c : spec.components()) {
        if (c.unramified()) continue;
        int d = c.phi.order();
        Rational f = Rational(d - 1) / d;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += f * c.cls.coeffs()[i];
    }
    Rational square = s[0] * s[0];
    for (std::size_t i = 1; i < s.size(); ++i) square -= s[i] * s[i];
    Rational k2 = square * order;
    if (denominator(k2) != 1) throw consistency_error("K^2 of the cover is not an integer");

    SurfaceInvariants inv;
    inv.k2 = static_cast<long long>(numerator(k2));
    for (const auto& chi : spec.characters()) {
        DivisorClass l = eigensheaf(spec, chi);
        inv.chi += lat.chi(-l);
        inv.pg += lat.h0(k + l);
        inv.q += lat.h1(k + l);
    }
    return inv;
}

namespace {

// nonidentity group elements g with <chi, g> != ord(g) - 1, the
// membership test behind both eigensheaf tables
std::vector<GroupVector> tangent_s_set(const Subgroup& g, const Character& chi) {
    std::vector<GroupVector> out;
    for (const auto& e : g.elements()) {
        if (e.is_zero()) continue;
        int m = e.order();
        if (chi.pair(e) % m != m - 1) out.push_back(e);
    }
    return out;
}

// S for the bicanonical splitting: (m/d) chi(g) != m - 1 in Z/m
std::vector<GroupVector> bicanonical_s_set(const Subgroup& g, const Character& chi, int chi_order_on_group) {
    std::vector<GroupVector> out;
    for (const auto& e : g.elements()) {
        if (e.is_zero()) continue;
        int m = e.order();
        int d = chi_order_on_group;
        if (m % d != 0) throw consistency_error("bicanonical split needs ord(chi) | ord(g)");
        int lifted = chi.pair(e) % m; // for d | m the pairing already lands in Z/m
        int value = static_cast<int>((static_cast<long long>(m / d) * lifted) % m);
        if (d == 1) value = 0;
        if (value != m - 1) out.push_back(e);
    }
    return out;
}

int order_on_group(const Subgroup& g, const Character& chi) {
    int d = 1;
    for (const auto& b : g.basis()) {
        int v = chi.pair(b);
        int ord = chi.modulus() / std::gcd(v, chi.modulus());
        d = std::lcm(d, ord);
    }
    return d;
}

std::vector<std::string> components_with_value_in(const CoverSpec& spec, const std::vector<GroupVector>& s) {
    std::set<GroupVector> sset(s.begin(), s.end());
    std::vector<std::string> names;
    for (const auto& c : spec.components())
        if (!c.unramified() && sset.count(c.phi)) names.push_back(c.name);
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace

std::vector<EigensheafRow> tangent_table(const CoverSpec& spec) {
    auto singular = singular_points(smoothness_report(spec));
    if (!singular.empty()) throw precondition_error("tangent table needs a smooth cover");
    const Subgroup& g = spec.group();
    const DivisorClass k = spec.lattice().canonical();
    std::vector<EigensheafRow> rows;
    for (const auto& chi : spec.characters()) {
        EigensheafRow row{chi.dual(), eigensheaf(spec, chi), DivisorClass::zero(spec.lattice().r()), {}, {}, 0};
        row.a = k + row.l;
        row.s_set = tangent_s_set(g, chi);
        row.delta_names = components_with_value_in(spec, row.s_set);
        std::vector<DivisorClass> classes;
        for (const auto& name : row.delta_names) classes.push_back(spec.component(name).cls);
        row.chi_log = spec.lattice().chi_log_rank2(row.a, classes);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BicanonicalRow> bicanonical_table(const CoverSpec& spec) {
    auto singular = singular_points(smoothness_report(spec));
    if (!singular.empty()) throw precondition_error("bicanonical table needs a smooth cover");
    const Subgroup& g = spec.group();
    const DivisorClass k = spec.lattice().canonical();
    std::vector<BicanonicalRow> rows;
    for (const auto& chi : spec.characters()) {
        Character inv = chi.inverse();
        int d = order_on_group(g, inv);
        auto s = bicanonical_s_set(g, inv, d);
        DivisorClass delta_sum = DivisorClass::zero(spec.lattice().r());
        std::set<GroupVector> sset(s.begin(), s.end());
        for (const auto& c : spec.components())
            if (!c.unramified() && sset.count(c.phi)) delta_sum = delta_sum + c.cls;
        DivisorClass l_inv = eigensheaf(spec, inv);
        DivisorClass cls = k * 2 + delta_sum + l_inv;
        rows.push_back({chi.dual(), delta_sum, l_inv, cls, spec.lattice().h0(cls)});
    }
    return rows;
}

BicanonicalAnalysis bicanonical_analysis(const CoverSpec& spec) {
    BicanonicalAnalysis out;
    auto rows = bicanonical_table(spec);
    std::vector<GroupVector> sections;
    for (const auto& row : rows) {
        out.h0_total += row.h0;
        if (row.h0 > 0) sections.push_back(row.character);
    }
    out.section_characters = sections;

    // the section characters generate the character group iff together
    // with the annihilator of the cover group they span the full dual
    const Subgroup& g = spec.group();
    std::vector<GroupVector> duals = sections;
    std::vector<int> idx(static_cast<std::size_t>(spec.ambient_dim()), 0);
    while (true) {
        GroupVector dual(spec.modulus(), idx);
        Character chi(dual);
        bool annihilates = true;
        for (const auto& b : g.basis())
            if (chi.pair(b) != 0) {
                annihilates = false;
                break;
            }
        if (annihilates) duals.push_back(dual);
        int i = spec.ambient_dim() - 1;
        while (i >= 0) {
            if (++idx[static_cast<std::size_t>(i)] < spec.modulus()) break;
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    auto span = Subgroup::span(spec.modulus(), spec.ambient_dim(), duals);
    std::size_t full = 1;
    for (int i = 0; i < spec.ambient_dim(); ++i) full *= static_cast<std::size_t>(spec.modulus());
    out.generates_character_group = span.order() == full;
    return out;
}

CoverSpec quotient_branch_data(const CoverSpec& spec, const Subgroup& h) {
    const Subgroup& g = spec.group();
    if (!g.contains_subgroup(h)) throw membership_error("quotient subgroup is not contained in the cover group");
    QuotientMap qm(g, h);
    int q = qm.quotient_dim();
    std::vector<BranchComponent> comps;
    for (const auto& c : spec.components())
        comps.push_back({c.name, c.cls, qm.project(c.phi)});
    CoverSpec out(spec.name_ + "/H", spec.n_, q, spec.lattice_, std::move(comps), spec.incidences_);
    out.blown_ = spec.blown_;
    return out;
}

} // namespace abcov
