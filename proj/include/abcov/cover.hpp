#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "abcov/group.hpp"
#include "abcov/picard.hpp"

namespace abcov {

/// One irreducible piece of the branch configuration. A zero value means
/// the component carries no ramification (possible after blow-ups and
/// quotients) and is excluded from all branch sums.
struct BranchComponent {
    std::string name;
    DivisorClass cls;
    GroupVector phi;

    bool unramified() const { return phi.is_zero(); }
};

struct IncidencePoint {
    std::string name;
    std::vector<std::string> components;
    bool on_exceptional = false;
};

/// A branch configuration on a blow-up of the plane together with the
/// homomorphism into (Z/n)^k defining the cover.
class CoverSpec {
public:
    CoverSpec(std::string name, int modulus, int ambient_dim, PicLattice lattice,
              std::vector<BranchComponent> components, std::vector<IncidencePoint> incidences);

    static CoverSpec from_json(const nlohmann::json& j);
    static CoverSpec load(const std::string& path);
    nlohmann::json to_json() const;

    const std::string& name() const { return name_; }
    int modulus() const { return n_; }
    int ambient_dim() const { return k_; }
    const PicLattice& lattice() const { return lattice_; }
    const std::vector<BranchComponent>& components() const { return components_; }
    const std::vector<IncidencePoint>& incidences() const { return incidences_; }
    const BranchComponent& component(const std::string& name) const;
    bool has_incidence(const std::string& name) const;
    const std::vector<std::string>& blown_points() const { return blown_; }

    // optional config payload
    std::vector<std::string> blow_up_directives;
    nlohmann::json expected() const;

    /// Galois group of the cover: the span of the component values.
    const Subgroup& group() const;

    /// Canonical representatives for the characters of the cover group:
    /// dual vectors in lexicographic order, one per distinct restriction.
    std::vector<Character> characters() const;

    /// Sum of the ramified component classes.
    DivisorClass total_branch_class() const;

    friend CoverSpec blowup_extend(const CoverSpec& spec, const std::string& point_name);
    friend CoverSpec quotient_branch_data(const CoverSpec& spec, const Subgroup& h);

private:
    std::string name_;
    int n_;
    int k_;
    PicLattice lattice_;
    std::vector<BranchComponent> components_;
    std::vector<IncidencePoint> incidences_;
    std::vector<std::string> blown_;
    std::string expected_raw_; // round-tripped config block
    mutable std::optional<Subgroup> group_;
};

struct PointVerdict {
    std::string point;
    bool smooth = false;
    std::string reason;
};

/// Per-point nonsingularity test: a point is smooth iff at most one
/// ramified component passes through it, or exactly two whose values
/// span a direct sum (the span order is the product of the two orders).
std::vector<PointVerdict> smoothness_report(const CoverSpec& spec);
std::vector<std::string> singular_points(const std::vector<PointVerdict>& verdicts);

/// Blow up one incidence point: incident classes drop by the new
/// exceptional class, the exceptional component receives the sum of the
/// incident values and is flagged unramified when that sum vanishes.
CoverSpec blowup_extend(const CoverSpec& spec, const std::string& point_name);

/// Run the spec's blow_up directives in order.
CoverSpec apply_blow_ups(const CoverSpec& spec);

/// Eigensheaf class: n * L = sum <chi, phi(component)> * class, with the
/// paired coefficients taken in [0, n).
DivisorClass eigensheaf(const CoverSpec& spec, const Character& chi);

struct SurfaceInvariants {
    long long k2 = 0;
    long long chi = 0;
    long long pg = 0;
    long long q = 0;
    bool operator==(const SurfaceInvariants&) const = default;
};

/// K^2, chi(O), p_g, q of the covering surface (requires an all-smooth
/// configuration).
SurfaceInvariants invariants(const CoverSpec& spec);

struct EigensheafRow {
    GroupVector character;               // dual coordinates of the representative
    DivisorClass l;                      // eigensheaf class
    DivisorClass a;                      // K_Y + L
    std::vector<GroupVector> s_set;      // nonidentity g with chi(g) != ord(g)-1
    std::vector<std::string> delta_names; // components whose value lies in s_set
    long long chi_log = 0;               // chi of the twisted log sheaf
};
std::vector<EigensheafRow> tangent_table(const CoverSpec& spec);

struct BicanonicalRow {
    GroupVector character;
    DivisorClass delta_sum; // sum of Delta_g over S_{chi^-1}
    DivisorClass l_inverse; // L_{chi^-1}
    DivisorClass cls;       // 2K + delta_sum + l_inverse
    long long h0 = 0;
};
std::vector<BicanonicalRow> bicanonical_table(const CoverSpec& spec);

struct BicanonicalAnalysis {
    std::vector<GroupVector> section_characters;
    bool generates_character_group = false;
    long long h0_total = 0;
};
BicanonicalAnalysis bicanonical_analysis(const CoverSpec& spec);

/// Branch data of the quotient cover X/H -> Y: the same configuration
/// with every value pushed through the canonical quotient coordinates of
/// group()/h. Components with trivial induced value come out unramified.
CoverSpec quotient_branch_data(const CoverSpec& spec, const Subgroup& h);

} // namespace abcov
