// End-to-end acceptance runs: every headline number the library must
// reproduce, one pass/fail line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "abcov/cover.hpp"
#include "abcov/eisenstein.hpp"
#include "abcov/group_algebra.hpp"
#include "abcov/presentation.hpp"
#include "abcov/reports.hpp"
#include "abcov/snf.hpp"
#include "kulikov_data.hpp"

using namespace abcov;
using namespace testdata;

namespace {

int failures = 0;
int current = 0;
bool current_ok = true;

void begin(int number) {
    current = number;
    current_ok = true;
}

void expect(bool cond, const char* what) {
    if (!cond) {
        current_ok = false;
        std::printf("  criterion %d: FAILED check: %s\n", current, what);
    }
}

void finish(const char* label, double ms = -1.0) {
    if (!current_ok) ++failures;
    if (ms >= 0)
        std::printf("[%s] criterion %d: %s (%.0f ms)\n", current_ok ? "PASS" : "FAIL", current, label, ms);
    else
        std::printf("[%s] criterion %d: %s\n", current_ok ? "PASS" : "FAIL", current, label);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string data_path(const std::string& file) { return default_data_dir() + "/" + file; }

} // namespace

int main() {
    // 1. invariants of the order-9 cover
    begin(1);
    {
        auto rep = cmd_invariants(data_path("kulikov.json"));
        expect(rep.ok, "expected block comparison");
        auto inv = rep.doc["results"]["invariants"];
        expect(inv["K2"] == 6 && inv["chi"] == 1 && inv["pg"] == 0 && inv["q"] == 0,
               "K2=6 chi=1 pg=0 q=0");
    }
    finish("branched-cover invariants K2=6, chi=1, pg=0, q=0");

    // 2. invariants of the maximal order-243 cover, summed over all 243 characters
    begin(2);
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = cmd_invariants(data_path("maximal_cover.json"));
        double ms = ms_since(t0);
        expect(rep.ok, "expected block comparison");
        auto inv = rep.doc["results"]["invariants"];
        expect(inv["K2"] == 162 && inv["chi"] == 27 && inv["pg"] == 29 && inv["q"] == 3,
               "K2=162 chi=27 pg=29 q=3");
        expect(ms < 5000.0, "runtime under five seconds");
        finish("maximal-cover invariants K2=162, chi=27, pg=29, q=3", ms);
    }

    // 3. tangent-sheaf decomposition table
    begin(3);
    {
        auto rep = cmd_tables(data_path("kulikov.json"), "tangent", data_path("fixtures/table_tangent.json"));
        expect(rep.ok, "all nine rows match the fixture");
        expect(rep.doc["results"]["chi_log_sum"] == 2, "chi sum equals 2");
        expect(rep.doc["results"]["h1_tangent"] == 1, "derived h1 of the tangent pushforward equals 1");
    }
    finish("tangent table reproduction, chi sum 2, h1 = 1");

    // 4. bicanonical decomposition table and birationality data
    begin(4);
    {
        auto rep = cmd_tables(data_path("kulikov.json"), "bicanonical", data_path("fixtures/table_bicanonical.json"));
        expect(rep.ok, "all nine classes match the fixture");
        CoverSpec spec = apply_blow_ups(CoverSpec::load(data_path("kulikov.json")));
        auto rows = bicanonical_table(spec);
        bool worked_row = false;
        for (const auto& r : rows)
            if (r.character == GroupVector(3, {2, 2})) worked_row = r.cls == DivisorClass({1, 1, 0, 1});
        expect(worked_row, "row (2,2) equals H - E1 - E3");
        auto analysis = bicanonical_analysis(spec);
        std::set<GroupVector> got(analysis.section_characters.begin(), analysis.section_characters.end());
        std::set<GroupVector> want{GroupVector(3, {0, 0}), GroupVector(3, {0, 2}), GroupVector(3, {2, 0}),
                                   GroupVector(3, {2, 1}), GroupVector(3, {2, 2})};
        expect(got == want, "section characters set");
        expect(analysis.generates_character_group, "section characters generate");
        SurfaceInvariants inv = invariants(spec);
        expect(analysis.h0_total == 7 && inv.chi + inv.k2 == 7, "h0(2K) = 7 = chi + K2");
    }
    finish("bicanonical table reproduction, sections {(0,0),(0,2),(2,2),(2,0),(2,1)}, h0(2K)=7");

    // 5. subgroup identities inside (Z/3)^6
    begin(5);
    {
        auto phi = phi6();
        std::vector<GroupVector> cols;
        for (int j = 0; j < 6; ++j) cols.push_back(phi.column(j));
        auto image = Subgroup::span(3, 6, cols);
        auto inter = kernel_image_intersect(psi_tilde(), image);
        auto span_g = Subgroup::span(3, 6, {g(1), g(2), g(3)});
        expect(inter == span_g, "Ker cap Im equals the span of the three generators");
        expect(matrix_rank_mod_n(phi) == 5, "cover matrix has rank 5");
        expect(xi(1) == v6({2, 1, 1, 2, 0, 0}), "xi1 vector");
        bool rel = true;
        for (int i = 1; i <= 3; ++i) {
            int ip1 = i == 3 ? 1 : i + 1;
            rel = rel && g(i) == xi(ip1) + omega(ip1);
        }
        expect(rel, "g_i = xi_{i+1} omega_{i+1}");
    }
    finish("group identities: kernel intersection, rank 5, xi1, g_i relations");

    // 6. homology of the affine group and its three index-3 subgroups
    begin(6);
    {
        auto gamma = cmd_homology("gamma");
        expect(gamma.doc["results"]["free_rank"] == 0 &&
                   gamma.doc["results"]["torsion"] == nlohmann::ordered_json::array({3, 3, 3}),
               "abelianisation (3,3,3)");
        for (const std::string target : {"sigma1", "sigma2", "sigma3"}) {
            auto rep = cmd_homology(target);
            expect(rep.doc["results"]["free_rank"] == 2 &&
                       rep.doc["results"]["torsion"] == nlohmann::ordered_json::array({3, 3}),
                   "index-3 subgroup abelianisation Z^2 + (3,3)");
        }
    }
    finish("homology: Gamma -> (Z/3)^3, each index-3 subgroup -> Z^2 + (Z/3)^2");

    // 7. affine relation suite and fixed-point census
    begin(7);
    {
        auto rep = cmd_free_action();
        expect(rep.doc["results"]["relations_all_hold"] == true, "all displayed relations hold exactly");
        expect(rep.doc["results"]["origin_fixing"] ==
                   nlohmann::ordered_json::array({{1, 1, 1}, {2, 2, 2}}),
               "exactly the two triple-product powers fix the origin");
        expect(rep.doc["results"]["stabilizer_origin_order"] == 3, "origin stabilizer has order 3");
        // ambient census: fixed points exist exactly for the eight classes
        // rotating every coordinate (the two distinguished powers among them)
        expect(rep.doc["results"]["nonempty_fixed_locus"].size() == 8,
               "ambient census: eight all-rotational classes");
    }
    finish("relation suite exact; origin stabilizer = the two triple-product powers, order 3");

    // 8. ideal-membership certificate
    begin(8);
    {
        auto t0 = std::chrono::steady_clock::now();
        auto full = cmd_bloch("full");
        auto without = cmd_bloch("without-extra");
        double ms = ms_since(t0);
        expect(full.doc["results"]["member"] == true, "member with all 55 generators");
        expect(without.doc["results"]["member"] == false, "not a member without the extra generator");
        expect(ms < 20000.0, "runtime under twenty seconds");
        finish("ideal membership: true with 55 generators, false with 54", ms);
    }

    // 9. quotient branch data of the worked example
    begin(9);
    {
        CoverSpec plane = CoverSpec::load(data_path("kulikov.json"));
        std::vector<BranchComponent> comps;
        for (int i = 0; i < 6; ++i) {
            const auto& c = plane.components()[static_cast<std::size_t>(i)];
            comps.push_back({c.name, c.cls, phi6().column(i)});
        }
        CoverSpec big("maximal-plane", 3, 6, PicLattice(0), comps, plane.incidences());
        auto h = Subgroup::span(3, 6, {omega(1), xi(3) * 2 + omega(2), xi(3) + omega(3)});
        CoverSpec quo = quotient_branch_data(big, h);
        auto val = [&](const char* n) { return quo.component(n).phi; };
        expect(val("D4").is_zero(), "omega1 trivial in the quotient");
        expect(val("D2") == val("D6") * 2, "delta2 = omega3^2");
        expect(val("D3") == val("D1") * 2 + val("D6"), "delta3 = delta1^2 omega3");
        expect(val("D5") == val("D6") * 2, "omega2 = omega3^2");
        CoverSpec resolved = blowup_extend(blowup_extend(blowup_extend(quo, "P2"), "P3"), "D5*D6");
        expect(resolved.component("E2").unramified(), "unramified over the exceptional at P2");
        expect(resolved.component("E(D5*D6)").unramified(), "unramified over the cevian double point");
        expect(!resolved.component("E3").unramified(), "still ramified over P3");
    }
    finish("quotient branch data: induced classes and unramified exceptionals");

    // 10. property suites
    begin(10);
    {
        // smith normal form round-trips
        std::mt19937 rng(987654);
        std::uniform_int_distribution<int> dim(1, 12), entry(-9, 9);
        bool snf_ok = true;
        for (int trial = 0; trial < 200 && snf_ok; ++trial) {
            std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
            IntMat m(rows, std::vector<Int>(cols));
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            auto snf = smith_normal_form(m);
            Int du = mat_det(snf.u), dv = mat_det(snf.v);
            snf_ok = snf_ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
            IntMat prod = mat_mul(mat_mul(snf.u, m), snf.v);
            for (std::size_t i = 0; i < rows && snf_ok; ++i)
                for (std::size_t j = 0; j < cols && snf_ok; ++j) {
                    Int want = (i == j && i < snf.diag.size()) ? snf.diag[i] : Int(0);
                    snf_ok = prod[i][j] == want;
                }
            for (std::size_t i = 0; i + 1 < snf.diag.size() && snf_ok; ++i)
                snf_ok = snf.diag[i] > 0 && snf.diag[i + 1] % snf.diag[i] == 0;
        }
        expect(snf_ok, "200 random SNF round-trips");

        // duality on every class in either table
        CoverSpec spec = apply_blow_ups(CoverSpec::load(data_path("kulikov.json")));
        const auto& lat = spec.lattice();
        bool duality_ok = true;
        std::vector<DivisorClass> classes;
        for (const auto& row : tangent_table(spec)) {
            classes.push_back(row.l);
            classes.push_back(row.a);
        }
        for (const auto& row : bicanonical_table(spec)) {
            classes.push_back(row.delta_sum);
            classes.push_back(row.l_inverse);
            classes.push_back(row.cls);
        }
        for (const auto& d : classes)
            duality_ok = duality_ok && lat.h0(d) - lat.h1(d) + lat.h2(d) == lat.chi(d);
        expect(duality_ok, "h0 - h1 + h2 = chi on all table classes");

        // subgroup-sum identity on all 55 list members
        bool idem_ok = true;
        for (const auto& sum : quotient_list_sums())
            idem_ok = idem_ok && sum.element * sum.element ==
                                     sum.element.scaled(static_cast<long long>(sum.subgroup.order()));
        expect(idem_ok, "z(H)^2 = |H| z(H) on the 55-member list");

        // pairing biadditivity
        std::uniform_int_distribution<int> coord(0, 2);
        bool pairing_ok = true;
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> cc(6), aa(6), bb(6);
            for (auto& x : cc) x = coord(rng);
            for (auto& x : aa) x = coord(rng);
            for (auto& x : bb) x = coord(rng);
            Character chi{GroupVector(3, cc)};
            GroupVector a(3, aa), b(3, bb);
            pairing_ok = pairing_ok && chi.pair(a + b) == (chi.pair(a) + chi.pair(b)) % 3;
        }
        expect(pairing_ok, "pairing biadditivity on 500 samples");
    }
    finish("property suites: SNF round-trip, duality, subgroup sums, pairing");

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
