#pragma once

// Claim runners.  Each runner recomputes one published statement of the
// determinantal-ideal story from scratch and reports pass/fail together with
// the computed artifacts (dimensions, residues, basis sizes, display
// comparisons).  Where a printed display differs from the exact algebra by a
// sign or a copied line, the runner certifies the corrected identity and
// records the literal display comparison under a *_display flag, so the
// substance and the typography are judged separately.
//
// Reports are assembled in a fixed claim-id order and serialize
// byte-for-byte for a fixed configuration; --deterministic zeroes wall times.

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "detideal/fixtures.hpp"
#include "detideal/gb_cache.hpp"
#include "detideal/groebner.hpp"
#include "detideal/specialize.hpp"

namespace detideal {

struct ClaimResult {
    std::string id;
    std::string citation;
    std::string status;  // "pass", "fail", "skipped", "budget_exhausted"
    nlohmann::json data;
    long long millis = 0;
};

struct VerifyOptions {
    bool deterministic = false;    // zero wall times for byte-stable reports
    bool run_qq = true;            // rational lane of the decomposition claim
    GbBudget budget;               // applies to every GF(32003) computation
    GbBudget qq_budget;            // separate budget for the rational lane
    const GbCache* cache = nullptr;
};

namespace claims {

inline FieldConfig gf() { return FieldConfig::prime(32003); }

template <class F>
Polynomial<F> det2(const RingPtr& R, const std::string& a, const std::string& b,
                   const std::string& c, const std::string& d) {
    return fixtures::matrix_of<F>(R, {{a, b}, {c, d}}).determinant();
}

template <class F>
bool matvec_kernel(const PolyMatrix<F>& M, const std::vector<Polynomial<F>>& v) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Polynomial<F> acc = Polynomial<F>::zero(M.ring());
        for (std::size_t j = 0; j < M.cols(); ++j) acc = acc + M.at(i, j) * v[j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

// Conditions (i)-(iii) on the catalecticant presentation, plus the
// surrounding dimension bookkeeping: dim R/I_3(M_3) = 6, height 4, and the
// leading-term bound forcing height I_2(N) >= 5 > 4.
inline void claim_cor32(const VerifyOptions& opt, ClaimResult& out) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    ConditionReport rep = check_theorem<GF>(fixtures::catalecticant_sequence(), gf(), ord,
                                            opt.budget, opt.cache);

    auto s = fixtures::section3<GF>(gf());
    Ideal<GF> I33(s.ring, s.M3.minors(3));
    DimensionResult dim33 = krull_dimension(I33, ord, opt.budget, opt.cache);
    int height33 = static_cast<int>(s.ring->nvars()) - dim33.dim;

    auto cols = fixtures::first_two_columns<GF>(gf());
    auto mins = cols.N.minors(2);
    int lt_restricted = lt_dimension_bound_restricted(mins, ord);
    std::size_t occurring = occurring_variable_count(mins);
    int height_bound = static_cast<int>(occurring) - lt_restricted;
    bool contains_J = true;
    for (const auto& j : cols.J) {
        bool found = false;
        for (const auto& m : mins) {
            if (m.leading_monomial(ord) == j.leading_monomial(ord)) found = true;
        }
        contains_J = contains_J && found;
    }
    int height_I2N = height(Ideal<GF>(s.ring, mins), ord, opt.budget, opt.cache);

    bool pass = rep.all_hold && rep.dim_consistent && dim33.dim == 6 && height33 == 4 &&
                lt_restricted <= 3 && occurring == 8 && contains_J && height_bound >= 5 &&
                height_I2N >= 5 && height33 < height_I2N && rep.dim_full == dim33.dim;
    out.status = pass ? "pass" : "fail";
    out.data = {{"cond_i", rep.cond_i},
                {"cond_ii", rep.cond_ii},
                {"cond_iii", rep.cond_iii},
                {"dim_specialized", rep.dim_full},
                {"dim_plus_corner", rep.dim_plus_corner},
                {"predicted_dim", rep.predicted_dim},
                {"dim_consistent", rep.dim_consistent},
                {"dim_R_I3M3", dim33.dim},
                {"height_I3M3", height33},
                {"lt_bound_restricted", lt_restricted},
                {"occurring_vars", occurring},
                {"lt_contains_J", contains_J},
                {"height_I2N_bound", height_bound},
                {"height_I2N", height_I2N},
                {"height_strict", height33 < height_I2N}};
}

// Twelve bordered determinants vanish, their column kernels check out, the
// four two-column Laplace expansions hold (with display comparisons
// recorded), and the six Delta's multiply all twenty generators of I_3(M_3)
// into I_3(M_4).  sigma and tau fix I_3(M_4), transporting memberships.
inline void claim_prop33(const VerifyOptions& opt, ClaimResult& out) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    auto s = fixtures::section3<GF>(gf());
    const RingPtr& R = s.ring;

    int dets_zero = 0;
    for (const auto* fam : {&s.N, &s.V, &s.W}) {
        for (const auto& M : *fam) {
            if (M.determinant().is_zero()) ++dets_zero;
        }
    }
    // The printed third and fourth variant blocks each repeat their second
    // matrix; recorded verbatim rather than replaced by a guessed intent.
    bool v4_repeats_v2 = s.V[3] == s.V[1];
    bool w4_repeats_w2 = s.W[3] == s.W[1];

    auto kernel = [&](const char* x1, const char* x2, const char* x3, const char* x4) {
        std::vector<Polynomial<GF>> v;
        for (const char* e : {x1, x2, x3, x4, "0"}) v.push_back(parse_poly<GF>(R, e));
        return v;
    };
    int kernels_ok = 0;
    for (const auto& M : s.N) kernels_ok += matvec_kernel(M, kernel("a2", "-a1", "-a2", "a1"));
    for (const auto& M : s.V) kernels_ok += matvec_kernel(M, kernel("a3", "-a2", "-a3", "a2"));
    for (const auto& M : s.W) kernels_ok += matvec_kernel(M, kernel("a3", "-a1", "-a3", "a1"));

    auto tau_of = [&](const Polynomial<GF>& p) { return apply_variable_permutation(p, s.tau); };
    auto sigma_of = [&](const Polynomial<GF>& p) { return apply_variable_permutation(p, s.sigma); };
    const auto& D12 = s.delta(1, 2);
    auto q_aa = det2<GF>(R, "a1", "a2", "a2", "a3");
    auto q_a34 = det2<GF>(R, "a1", "a2", "a3", "a4");
    auto q_b34 = det2<GF>(R, "a1", "a2", "b3", "b4");
    auto q_b23 = det2<GF>(R, "a1", "a2", "b2", "b3");

    // Displayed expansions verbatim, then the sign-corrected forms that the
    // vanishing determinants actually force.
    bool n1_display = (D12 * s.d[1] - q_aa * s.d[5] + q_a34 * s.m1).is_zero();
    bool n1_exact = (-(D12 * s.d[1]) - q_aa * s.d[5] + q_a34 * s.m1).is_zero();
    bool n2_display = (D12 * s.d[2] - q_aa * tau_of(s.d[6]) + q_b34 * s.m1).is_zero();
    bool n2_exact = (-(D12 * s.d[2]) + q_aa * tau_of(s.d[5]) + q_b34 * s.m1).is_zero();
    bool n3_display = (D12 * s.d[3] - q_a34 * s.mbb + q_b23 * s.d[5]).is_zero();
    bool n3_exact = (-(D12 * s.d[3]) + q_a34 * s.mbb + q_b23 * s.d[5]).is_zero();
    bool n4_display = (D12 * tau_of(s.d[4]) - q_b23 * tau_of(s.d[5]) + q_b34 * s.mbb).is_zero();
    bool n4_exact = n4_display;

    auto gb34 = cached_buchberger(Ideal<GF>(R, s.M4.minors(3)), ord, opt.budget, opt.cache);
    auto in34 = [&](const Polynomial<GF>& p) { return normal_form(p, gb34).is_zero(); };

    bool d6_is_sigma_d5 = s.d[6] == sigma_of(s.d[5]);
    bool d5_member = in34(s.d[5]);
    bool d6_member = in34(s.d[6]);
    bool d12_tau_d4_member = in34(D12 * tau_of(s.d[4]));

    auto gens33 = s.M3.minors(3);
    const Polynomial<GF>* deltas[6] = {&s.delta(1, 2), &s.delta(2, 3), &s.delta(1, 3),
                                       &s.delta(4, 5), &s.delta(3, 4), &s.delta(3, 5)};
    int colon_ok = 0;
    for (const auto* D : deltas) {
        for (const auto& g : gens33) colon_ok += in34(*D * g);
    }

    auto gens34 = s.M4.minors(3);
    int closure_ok = 0;
    for (const auto& g : gens34) closure_ok += in34(sigma_of(g)) + in34(tau_of(g));

    bool pass = dets_zero == 12 && kernels_ok == 12 && n1_exact && n2_exact && n3_exact &&
                n4_exact && d6_is_sigma_d5 && d5_member && d6_member && d12_tau_d4_member &&
                colon_ok == 120 && closure_ok == 32;
    out.status = pass ? "pass" : "fail";
    out.data = {{"dets_zero", dets_zero},
                {"kernel_relations", kernels_ok},
                {"expansions",
                 {{"n1", {{"exact", n1_exact}, {"display", n1_display}}},
                  {"n2", {{"exact", n2_exact}, {"display", n2_display}}},
                  {"n3", {{"exact", n3_exact}, {"display", n3_display}}},
                  {"n4", {{"exact", n4_exact}, {"display", n4_display}}}}},
                {"d6_is_sigma_d5", d6_is_sigma_d5},
                {"d5_in_I3M4", d5_member},
                {"d6_in_I3M4", d6_member},
                {"delta12_tau_d4_in_I3M4", d12_tau_d4_member},
                {"colon_memberships", colon_ok},
                {"sigma_tau_closure", closure_ok},
                {"v4_repeats_v2", v4_repeats_v2},
                {"w4_repeats_w2", w4_repeats_w2},
                {"gb_I3M4_size", gb34.elements.size()}};
}

// Both containments of the decomposition, generator by generator.
inline void claim_prop34a(const VerifyOptions& opt, ClaimResult& out) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    auto s = fixtures::section3<GF>(gf());
    auto gb25 = cached_buchberger(Ideal<GF>(s.ring, s.M5.minors(2)), ord, opt.budget, opt.cache);
    auto gb33 = cached_buchberger(Ideal<GF>(s.ring, s.M3.minors(3)), ord, opt.budget, opt.cache);
    auto gens34 = s.M4.minors(3);
    int in25 = 0, in33 = 0;
    for (const auto& g : gens34) {
        in25 += normal_form(g, gb25).is_zero();
        in33 += normal_form(g, gb33).is_zero();
    }
    bool pass = gens34.size() == 16 && in25 == 16 && in33 == 16;
    out.status = pass ? "pass" : "fail";
    out.data = {{"generators", gens34.size()}, {"in_I2M5", in25}, {"in_I3M3", in33}};
}

// The bordered-determinant derivation for delta*Delta_12, the three explicit
// expansion identities, and all ten memberships delta*Delta_ij in I_3(M_4).
inline void claim_prop35(const VerifyOptions& opt, ClaimResult& out) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    auto s = fixtures::section3<GF>(gf());
    const RingPtr& R = s.ring;
    const Polynomial<GF>& delta = s.d[1];
    const auto& D12 = s.delta(1, 2);

    bool dup_zero = fixtures::matrix_of<GF>(R, {{"a1", "a1", "a2", "a3"},
                                                {"a2", "a2", "a3", "a4"},
                                                {"a3", "a3", "a4", "a5"},
                                                {"b1", "b1", "b2", "b3"}})
                        .determinant()
                        .is_zero();

    // The column operation a2*c1 - a1*c3 lands -Delta_12 in the corner; the
    // print shows +Delta_12.  Both variants evaluated.
    auto bordered = [&](const Polynomial<GF>& corner) {
        PolyMatrix<GF> B(R, 4, 4);
        B.set(0, 0, Polynomial<GF>::zero(R));
        B.set(1, 0, det2<GF>(R, "a2", "a1", "a3", "a2"));  // a2^2 - a1*a3
        B.set(2, 0, det2<GF>(R, "a2", "a1", "a4", "a3"));  // a2*a3 - a1*a4
        B.set(3, 0, corner);
        const char* rest[4][3] = {{"a1", "a2", "a3"},
                                  {"a2", "a3", "a4"},
                                  {"a3", "a4", "a5"},
                                  {"b1", "b2", "b3"}};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 3; ++j) B.set(i, j + 1, parse_poly<GF>(R, rest[i][j]));
        }
        return B.determinant();
    };
    auto det_display = bordered(D12);
    auto det_exact = bordered(-D12);
    bool bordered_display = det_display.is_zero();
    bool bordered_exact = det_exact.is_zero();
    bool bordered_display_value = det_display == -(delta * D12) - (delta * D12);

    auto c_aa = det2<GF>(R, "a2", "a1", "a3", "a2");
    auto c_34 = det2<GF>(R, "a2", "a1", "a4", "a3");
    bool laplace_display = (-(c_aa * s.d[5]) + c_34 * s.m1 - delta * D12).is_zero();
    bool laplace_exact = (-(c_aa * s.d[5]) + c_34 * s.m1 + delta * D12).is_zero();

    bool d5_split = s.d[5] == s.ma - s.m2;

    auto p = [&](const std::string& t) { return parse_poly<GF>(R, t); };
    auto rhs_24 = s.m1 * p("a3*a5 - a4^2") + s.m2 * p("a2*a5 - a3*a4") + s.m3 * p("a3^2 - a2*a4");
    bool d14_display = delta * s.delta(1, 4) == rhs_24;
    bool d14_exact = delta * s.delta(1, 4) ==
                     s.m2 * p("a1*a5 - a2*a4") + s.m3 * p("a2*a3 - a1*a4") - s.ma * p("a3^2 - a2*a4");
    bool d24_exact = delta * s.delta(2, 4) == rhs_24;
    bool d15_exact = delta * s.delta(1, 5) ==
                     -(s.m1 * p("a3*a5 - a4^2")) + s.d[5] * p("a2*a5 - a3*a4") +
                         s.m4 * p("a1*a5 - a3^2") + s.m3 * p("a2*a4 - a1*a5") +
                         s.m5 * p("a2*a3 - a1*a4");

    bool sigma_fixes_delta = apply_variable_permutation(delta, s.sigma) == delta;

    auto gb34 = cached_buchberger(Ideal<GF>(R, s.M4.minors(3)), ord, opt.budget, opt.cache);
    int members = 0;
    for (const auto& D : s.delta10) members += normal_form(delta * D, gb34).is_zero();

    bool pass = dup_zero && bordered_exact && bordered_display_value && laplace_exact &&
                d5_split && d14_exact && d24_exact && d15_exact && sigma_fixes_delta &&
                members == 10;
    out.status = pass ? "pass" : "fail";
    out.data = {{"duplicate_columns_zero", dup_zero},
                {"bordered", {{"exact", bordered_exact},
                              {"display", bordered_display},
                              {"display_det_is_minus_2_delta_D12", bordered_display_value}}},
                {"laplace", {{"exact", laplace_exact}, {"display", laplace_display}}},
                {"d5_split", d5_split},
                {"delta14", {{"exact", d14_exact}, {"display", d14_display}}},
                {"delta24", {{"exact", d24_exact}, {"display", d24_exact}}},
                {"delta15", {{"exact", d15_exact}, {"display", d15_exact}}},
                {"sigma_fixes_delta", sigma_fixes_delta},
                {"memberships", members}};
}

// The decomposition itself: reduced GB of I_2(M_5) n I_3(M_3) equals the
// reduced GB of I_3(M_4) element-by-element over GF(32003), with a rational
// lane that either confirms or reports budget exhaustion without failing.
inline void claim_thm36(const VerifyOptions& opt, ClaimResult& out) {
    const MonomialOrder ord = MonomialOrder::grevlex();

    auto run_lane = [&]<class F>(const FieldConfig& fc, const GbBudget& budget,
                                 nlohmann::json& lane, bool& equal) {
        auto T = hankel_matrices<F>(fc);
        const RingPtr& R = T.M5.ring();
        Ideal<F> I25(R, T.M5.minors(2));
        Ideal<F> I33(R, T.M3.minors(3));
        Ideal<F> I34(R, T.M4.minors(3));
        Ideal<F> K = ideal_intersection(I25, I33, budget, opt.cache);
        auto gbK = cached_buchberger(K, ord, budget, opt.cache);
        auto gb34 = cached_buchberger(I34, ord, budget, opt.cache);
        equal = gbK.elements == gb34.elements;
        lane["basis_size_intersection"] = gbK.elements.size();
        lane["basis_size_I3M4"] = gb34.elements.size();
        lane["equal"] = equal;
        if (!equal) {
            nlohmann::json only_K = nlohmann::json::array();
            nlohmann::json only_34 = nlohmann::json::array();
            for (const auto& e : gbK.elements) {
                if (std::find(gb34.elements.begin(), gb34.elements.end(), e) ==
                    gb34.elements.end()) {
                    only_K.push_back(to_string(e));
                }
            }
            for (const auto& e : gb34.elements) {
                if (std::find(gbK.elements.begin(), gbK.elements.end(), e) ==
                    gbK.elements.end()) {
                    only_34.push_back(to_string(e));
                }
            }
            lane["only_in_intersection"] = only_K;
            lane["only_in_I3M4"] = only_34;
        }
        return std::pair{I34, gb34};
    };

    nlohmann::json gf_lane;
    bool gf_equal = false;
    auto [I34, gb34] = run_lane.template operator()<GF>(gf(), opt.budget, gf_lane, gf_equal);

    DimensionResult dim34 = krull_dimension(gb34);
    gf_lane["dim_R_I3M4"] = dim34.dim;
    gf_lane["height_I3M4"] = static_cast<int>(I34.ring()->nvars()) - dim34.dim;

    auto s = fixtures::section3<GF>(gf());
    auto gb25 = cached_buchberger(Ideal<GF>(s.ring, s.M5.minors(2)), ord, opt.budget, opt.cache);
    auto gb33 = cached_buchberger(Ideal<GF>(s.ring, s.M3.minors(3)), ord, opt.budget, opt.cache);
    int contained = 0;
    for (const auto& g : s.M4.minors(3)) {
        contained += normal_form(g, gb25).is_zero() + normal_form(g, gb33).is_zero();
    }
    gf_lane["containments"] = contained;

    std::string qq_status = "not_run";
    bool qq_ok = true;
    nlohmann::json qq_lane;
    if (opt.run_qq) {
        try {
            bool qq_equal = false;
            run_lane.template operator()<QQ>(FieldConfig::rationals(), opt.qq_budget, qq_lane,
                                             qq_equal);
            qq_status = qq_equal ? "equal" : "mismatch";
            qq_ok = qq_equal;
        } catch (const ResourceExhaustedError&) {
            qq_status = "budget_exhausted";  // recorded, not failed
            qq_lane = nlohmann::json::object();
        }
    }
    qq_lane["status"] = qq_status;

    bool pass = gf_equal && dim34.dim == 6 && contained == 32 && qq_ok;
    out.status = pass ? "pass" : "fail";
    out.data = {{"gf", gf_lane}, {"qq", qq_lane}};
}

// Condition (ii) on the two remark matrices: every presentation of the first
// is bad, its transpose admits a presentation passing all three conditions,
// and the second admits no good presentation in either orientation.
inline void claim_remark(const VerifyOptions& opt, ClaimResult& out) {
    using Rows = std::vector<std::vector<std::string>>;
    LabeledMatrix first(Rows{{"a", "X", "b"}, {"X", "c", "X"}, {"d", "e", "f"}});
    LabeledMatrix second(Rows{{"a", "X", "b"}, {"X", "c", "X"}, {"d", "X", "f"}});

    auto all_bad = [&](const LabeledMatrix& M) {
        PresentationResult pres = presentations(M, 3);
        std::size_t bad = 0;
        for (const auto& seq : pres.sequences) bad += is_bad(seq).bad;
        return std::tuple{pres.sequences.size(), bad, pres.budget_exhausted};
    };

    auto [first_total, first_bad, first_exh] = all_bad(first);

    PresentationResult tp = presentations(first.transpose(), 3);
    std::size_t tp_good = 0;
    bool tp_theorem = false;
    nlohmann::json tp_witness;
    for (const auto& seq : tp.sequences) {
        if (is_bad(seq).bad) continue;
        ++tp_good;
        if (!tp_theorem) {
            ConditionReport rep = check_theorem<GF>(seq, gf(), MonomialOrder::grevlex(),
                                                    opt.budget, opt.cache);
            if (rep.all_hold) {
                tp_theorem = true;
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [alpha, beta] : seq.pairs()) {
                    pairs.push_back({{"alpha", to_string(alpha)}, {"beta", to_string(beta)}});
                }
                tp_witness = {{"pairs", pairs},
                              {"predicted_dim", rep.predicted_dim},
                              {"dim", rep.dim_full},
                              {"dim_consistent", rep.dim_consistent}};
            }
        }
    }

    auto [second_total, second_bad, second_exh] = all_bad(second);
    auto [second_t_total, second_t_bad, second_t_exh] = all_bad(second.transpose());

    bool pass = first_total > 0 && first_bad == first_total && tp_good > 0 && tp_theorem &&
                second_bad == second_total && second_t_bad == second_t_total && !first_exh &&
                !tp.budget_exhausted && !second_exh && !second_t_exh;
    out.status = pass ? "pass" : "fail";
    out.data = {{"first", {{"presentations", first_total}, {"bad", first_bad}}},
                {"transpose",
                 {{"presentations", tp.sequences.size()},
                  {"good", tp_good},
                  {"theorem_witness", tp_witness}}},
                {"second", {{"presentations", second_total}, {"bad", second_bad}}},
                {"second_transpose", {{"presentations", second_t_total}, {"bad", second_t_bad}}}};
}

inline void claim_prop34cd(const VerifyOptions&, ClaimResult& out) {
    out.status = "skipped";
    out.data = {{"note", "associated-prime case analysis subsumed by thm36"}};
}

}  // namespace claims

inline const std::vector<std::pair<std::string, std::string>>& claim_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"cor32", "Corollary 3.2"},      {"prop33", "Proposition 3.3"},
        {"prop34a", "Proposition 3.4(a)"}, {"prop34cd", "Proposition 3.4(c)-(d)"},
        {"prop35", "Proposition 3.5"},   {"thm36", "Theorem 3.6"},
        {"remark", "Section 2 Remark"},
    };
    return catalog;
}

inline ClaimResult run_claim(const std::string& id, const VerifyOptions& opt = {}) {
    ClaimResult out;
    out.id = id;
    for (const auto& [cid, citation] : claim_catalog()) {
        if (cid == id) out.citation = citation;
    }
    if (out.citation.empty()) throw DomainError("unknown claim id \"" + id + "\"");

    auto start = std::chrono::steady_clock::now();
    if (id == "cor32") claims::claim_cor32(opt, out);
    else if (id == "prop33") claims::claim_prop33(opt, out);
    else if (id == "prop34a") claims::claim_prop34a(opt, out);
    else if (id == "prop34cd") claims::claim_prop34cd(opt, out);
    else if (id == "prop35") claims::claim_prop35(opt, out);
    else if (id == "thm36") claims::claim_thm36(opt, out);
    else claims::claim_remark(opt, out);
    auto stop = std::chrono::steady_clock::now();
    out.millis = opt.deterministic
                     ? 0
                     : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return out;
}

// Runs the requested claims (all when empty) in fixed catalog order, however
// the request was spelled.
inline std::vector<ClaimResult> run_claims(std::vector<std::string> ids,
                                           const VerifyOptions& opt = {}) {
    for (const auto& id : ids) {
        bool known = false;
        for (const auto& [cid, citation] : claim_catalog()) known = known || cid == id;
        if (!known) throw DomainError("unknown claim id \"" + id + "\"");
    }
    std::vector<ClaimResult> out;
    for (const auto& [cid, citation] : claim_catalog()) {
        if (ids.empty() || std::find(ids.begin(), ids.end(), cid) != ids.end()) {
            out.push_back(run_claim(cid, opt));
        }
    }
    return out;
}

inline nlohmann::json report_to_json(const std::vector<ClaimResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"citation", r.citation},
                       {"status", r.status},
                       {"data", r.data},
                       {"millis", r.millis}});
    }
    return arr;
}

}  // namespace detideal
