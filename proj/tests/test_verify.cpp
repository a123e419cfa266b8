#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "detideal/json_io.hpp"
#include "detideal/verify.hpp"

using namespace detideal;

namespace {

const FieldConfig kGF = FieldConfig::prime(32003);

struct TempFile {
    std::filesystem::path path;
    TempFile(const std::string& name, const std::string& text)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("matrix file loading") {
    TempFile f("detideal_m.json", R"({"rows": 2, "cols": 2,
        "entries": [["x", "y"], ["y", "z"]]})");
    MatrixInput m = load_matrix_file(f.path);
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    // Variables inferred in first-occurrence row-major order.
    CHECK(m.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(m.field == kGF);

    auto M = instantiate_matrix<GF>(m);
    CHECK(M.rows() == 2);
    CHECK(M.at(0, 1) == M.at(1, 0));
    CHECK(M.determinant() == parse_poly<GF>(M.ring(), "x*z - y^2"));

    // The same description instantiates over the rationals.
    MatrixInput mq = load_matrix_file(f.path, FieldConfig::rationals());
    auto MQ = instantiate_matrix<QQ>(mq);
    CHECK(MQ.determinant() == parse_poly<QQ>(MQ.ring(), "x*z - y^2"));
}

TEST_CASE("matrix file with explicit ring") {
    TempFile f("detideal_mr.json", R"({"rows": 1, "cols": 2,
        "entries": [["b", "a"]],
        "ring": {"vars": ["a", "b", "c"], "field": "gf:101"}})");
    MatrixInput m = load_matrix_file(f.path);
    CHECK(m.vars == std::vector<std::string>{"a", "b", "c"});
    CHECK(m.field == FieldConfig::prime(101));
}

TEST_CASE("matrix file errors") {
    TempFile missing_keys("detideal_bad1.json", R"({"rows": 2})");
    CHECK_THROWS_AS(load_matrix_file(missing_keys.path), ParseError);
    TempFile ragged("detideal_bad2.json", R"({"rows": 2, "cols": 2,
        "entries": [["x", "y"], ["z"]]})");
    CHECK_THROWS_AS(load_matrix_file(ragged.path), ParseError);
    TempFile not_json("detideal_bad3.json", "rows: 2");
    CHECK_THROWS_AS(load_matrix_file(not_json.path), ParseError);
    CHECK_THROWS_AS(load_matrix_file("/nonexistent/m.json"), ParseError);
}

TEST_CASE("ideal file with direct generators") {
    TempFile f("detideal_i.json", R"({"ring": {"vars": ["x", "y", "z", "w"], "field": "gf:32003"},
        "generators": ["x*z - y^2", "y*w - z^2", "x*w - y*z"]})");
    IdealInput in = load_ideal_file(f.path);
    CHECK(in.vars.size() == 4);
    CHECK(in.generators.size() == 3);
    auto I = instantiate_ideal<GF>(in);
    CHECK(I.generators().size() == 3);
    // The twisted cubic has dimension 2.
    CHECK(krull_dimension(I, MonomialOrder::grevlex()).dim == 2);
}

TEST_CASE("ideal file referencing a matrix") {
    TempFile mf("detideal_im.json", R"({"rows": 2, "cols": 3,
        "entries": [["x1", "x2", "x3"], ["x2", "x3", "x4"]]})");
    TempFile idf("detideal_ii.json", R"({"matrix": "detideal_im.json", "minors": 2})");
    IdealInput in = load_ideal_file(idf.path);
    REQUIRE(in.matrix.has_value());
    CHECK(in.minors_t == 2);
    auto I = instantiate_ideal<GF>(in);
    CHECK(I.generators().size() == 3);
    CHECK(height(I, MonomialOrder::grevlex()) == 2);
}

TEST_CASE("sequence file round trip") {
    TempFile f("detideal_s.json", R"({"m": 6, "n": 3, "t": 3, "pairs": [
        [[2,1],[1,2]], [[2,2],[1,3]], [[3,1],[2,2]], [[3,2],[2,3]],
        [[5,1],[4,2]], [[5,2],[4,3]], [[6,1],[5,2]], [[6,2],[5,3]]]})");
    IdentificationSequence seq = load_sequence_file(f.path);
    CHECK(seq.m() == 6);
    CHECK(seq.s() == 8);
    CHECK(seq.pairs() == fixtures::catalecticant_sequence().pairs());
    CHECK(!is_bad(seq).bad);

    TempFile bad("detideal_sbad.json", R"({"m": 6, "n": 3, "pairs": []})");
    CHECK_THROWS_AS(load_sequence_file(bad.path), ParseError);
    // Structurally valid JSON, semantically invalid sequence.
    TempFile dom("detideal_sdom.json", R"({"m": 2, "n": 3, "t": 2, "pairs": []})");
    CHECK_THROWS_AS(load_sequence_file(dom.path), DomainError);
}

TEST_CASE("fixture spot checks") {
    auto s = fixtures::section3<GF>(kGF);
    // Hankel layout: entry (2,3) of M4 is a4, entry (5,1) of M3 is b2.
    CHECK(s.M4.at(1, 2) == parse_poly<GF>(s.ring, "a4"));
    CHECK(s.M3.at(4, 0) == parse_poly<GF>(s.ring, "b2"));
    // Bordered matrix N1 ends its first row with b3.
    CHECK(s.N[0].at(0, 4) == parse_poly<GF>(s.ring, "b3"));
}

TEST_CASE("claim catalog") {
    CHECK(claim_catalog().size() == 7);
    CHECK_THROWS_AS(run_claim("nope"), DomainError);
    CHECK_THROWS_AS(run_claims({"thm36", "nope"}), DomainError);
    // Subsets come back in catalog order regardless of request order.
    VerifyOptions opt;
    opt.deterministic = true;
    auto rs = run_claims({"prop34cd", "cor32"}, opt);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].id == "cor32");
    CHECK(rs[1].id == "prop34cd");
    CHECK(rs[1].status == "skipped");
}

TEST_CASE("claim cor32") {
    auto r = run_claim("cor32");
    CHECK(r.status == "pass");
    CHECK(r.citation == "Corollary 3.2");
    CHECK(r.data["cond_i"] == true);
    CHECK(r.data["cond_ii"] == true);
    CHECK(r.data["cond_iii"] == true);
    CHECK(r.data["dim_specialized"] == 6);
    CHECK(r.data["predicted_dim"] == 6);
    CHECK(r.data["dim_R_I3M3"] == 6);
    CHECK(r.data["height_I3M3"] == 4);
    CHECK(r.data["lt_bound_restricted"] == 3);
    CHECK(r.data["occurring_vars"] == 8);
    CHECK(r.data["lt_contains_J"] == true);
    CHECK(r.data["height_I2N"] == 5);
    CHECK(r.data["height_strict"] == true);
}

TEST_CASE("claim prop33") {
    auto r = run_claim("prop33");
    CHECK(r.status == "pass");
    CHECK(r.data["dets_zero"] == 12);
    CHECK(r.data["kernel_relations"] == 12);
    // The first three printed expansions carry sign slips; the fourth is
    // literally exact.  All four corrected forms certify.
    for (const char* k : {"n1", "n2", "n3", "n4"}) {
        CHECK(r.data["expansions"][k]["exact"] == true);
    }
    CHECK(r.data["expansions"]["n1"]["display"] == false);
    CHECK(r.data["expansions"]["n2"]["display"] == false);
    CHECK(r.data["expansions"]["n3"]["display"] == false);
    CHECK(r.data["expansions"]["n4"]["display"] == true);
    CHECK(r.data["colon_memberships"] == 120);
    CHECK(r.data["sigma_tau_closure"] == 32);
    CHECK(r.data["v4_repeats_v2"] == true);
    CHECK(r.data["w4_repeats_w2"] == true);
    CHECK(r.data["d6_is_sigma_d5"] == true);
    CHECK(r.data["gb_I3M4_size"] == 20);
}

TEST_CASE("claim prop34a") {
    auto r = run_claim("prop34a");
    CHECK(r.status == "pass");
    CHECK(r.data["generators"] == 16);
    CHECK(r.data["in_I2M5"] == 16);
    CHECK(r.data["in_I3M3"] == 16);
}

TEST_CASE("claim prop35") {
    auto r = run_claim("prop35");
    CHECK(r.status == "pass");
    CHECK(r.data["duplicate_columns_zero"] == true);
    CHECK(r.data["bordered"]["exact"] == true);
    CHECK(r.data["bordered"]["display"] == false);
    CHECK(r.data["bordered"]["display_det_is_minus_2_delta_D12"] == true);
    CHECK(r.data["laplace"]["exact"] == true);
    CHECK(r.data["laplace"]["display"] == false);
    CHECK(r.data["d5_split"] == true);
    CHECK(r.data["delta14"]["exact"] == true);
    CHECK(r.data["delta14"]["display"] == false);
    CHECK(r.data["delta24"]["exact"] == true);
    CHECK(r.data["delta15"]["exact"] == true);
    CHECK(r.data["memberships"] == 10);
}

TEST_CASE("claim thm36") {
    auto r = run_claim("thm36");
    CHECK(r.status == "pass");
    CHECK(r.data["gf"]["equal"] == true);
    CHECK(r.data["gf"]["basis_size_intersection"] == 20);
    CHECK(r.data["gf"]["basis_size_I3M4"] == 20);
    CHECK(r.data["gf"]["dim_R_I3M4"] == 6);
    CHECK(r.data["gf"]["height_I3M4"] == 4);
    CHECK(r.data["gf"]["containments"] == 32);
    CHECK(r.data["qq"]["status"] == "equal");

    // A starved rational lane is recorded, not failed.
    VerifyOptions opt;
    opt.qq_budget.max_steps = 10;
    auto starved = run_claim("thm36", opt);
    CHECK(starved.status == "pass");
    CHECK(starved.data["qq"]["status"] == "budget_exhausted");
}

TEST_CASE("claim remark") {
    auto r = run_claim("remark");
    CHECK(r.status == "pass");
    CHECK(r.data["first"]["presentations"] == 6);
    CHECK(r.data["first"]["bad"] == 6);
    CHECK(r.data["transpose"]["presentations"] == 18);
    CHECK(r.data["transpose"]["good"].get<int>() > 0);
    CHECK(r.data["transpose"]["theorem_witness"]["dim"] == 6);
    CHECK(r.data["transpose"]["theorem_witness"]["dim_consistent"] == true);
    CHECK(r.data["second"]["presentations"] == 96);
    CHECK(r.data["second"]["bad"] == 96);
    CHECK(r.data["second_transpose"]["bad"] == 96);
}

TEST_CASE("report serialization is deterministic") {
    VerifyOptions opt;
    opt.deterministic = true;
    auto a = report_to_json(run_claims({"prop34a", "remark"}, opt)).dump(2);
    auto b = report_to_json(run_claims({"prop34a", "remark"}, opt)).dump(2);
    CHECK(a == b);
    CHECK(a.find("\"millis\": 0") != std::string::npos);

    auto rs = run_claims({"prop34a"}, opt);
    auto j = report_to_json(rs);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    for (const char* k : {"id", "citation", "status", "data", "millis"}) {
        CHECK(j[0].contains(k));
    }
}
