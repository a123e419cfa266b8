#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "detideal/fixtures.hpp"
#include "detideal/groebner.hpp"
#include "detideal/polymatrix.hpp"

using namespace detideal;

namespace {

const FieldConfig kGF = FieldConfig::prime(32003);
const MonomialOrder kGrev = MonomialOrder::grevlex();

Ideal<GF> ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<PolyGF> ps;
    for (const auto& g : gens) ps.push_back(parse_poly<GF>(R, g));
    return Ideal<GF>(R, std::move(ps));
}

Ideal<GF> minor_ideal(const PolyMatrix<GF>& M, std::size_t t) { return Ideal<GF>(M.ring(), M.minors(t)); }

}  // namespace

TEST_CASE("ideal constructor purges and deduplicates") {
    auto R = make_ring({"x", "y"}, kGF);
    auto I = ideal_of(R, {"x + y", "0", "2*x + 2*y", "x"});
    CHECK(I.generators().size() == 2);
    auto Z = ideal_of(R, {"0"});
    CHECK(Z.is_zero());
}

TEST_CASE("buchberger on textbook lex example") {
    auto R = make_ring({"x", "y"}, kGF);
    auto I = ideal_of(R, {"x^2 - y", "y^2 - 1"});
    auto G = buchberger(I, MonomialOrder::lex());
    REQUIRE(G.elements.size() == 2);
    // Ascending by leading monomial: y^2 - 1 before x^2 - y.
    CHECK(G.elements[0] == parse_poly<GF>(R, "y^2 - 1"));
    CHECK(G.elements[1] == parse_poly<GF>(R, "x^2 - y"));
    CHECK(groebner_certificate(G));
}

TEST_CASE("buchberger on a principal ideal normalizes monic") {
    auto R = make_ring({"x", "y"}, kGF);
    auto I = ideal_of(R, {"7*x^2*y - 14*y"});
    auto G = buchberger(I, kGrev);
    REQUIRE(G.elements.size() == 1);
    CHECK(G.elements[0] == parse_poly<GF>(R, "x^2*y - 2*y"));
}

TEST_CASE("generic 2x3 minors are already a basis") {
    auto M = generic_matrix<GF>(2, 3, kGF);
    auto I = minor_ideal(M, 2);
    auto G = buchberger(I, kGrev);
    REQUIRE(G.elements.size() == 3);
    std::vector<PolyGF> expected;
    for (const auto& m : M.minors(2)) expected.push_back(m.monic(kGrev));
    for (const auto& e : G.elements) {
        CHECK(std::count(expected.begin(), expected.end(), e) == 1);
    }
    CHECK(G.stats.pairs_reduced > 0);
    CHECK(groebner_certificate(G));
}

TEST_CASE("normal form fully reduces") {
    auto R = make_ring({"x", "y"}, kGF);
    auto I = ideal_of(R, {"x^2 - y", "y^2 - 1"});
    auto G = buchberger(I, MonomialOrder::lex());
    for (const auto& g : I.generators()) CHECK(normal_form(g, G).is_zero());
    // x^4 reduces through both elements to 1.
    CHECK(normal_form(parse_poly<GF>(R, "x^4"), G) == parse_poly<GF>(R, "1"));
    // No term of any normal form is divisible by a basis leading monomial.
    PolyGF p = parse_poly<GF>(R, "x^5*y^3 + x^3 + y + 3");
    PolyGF nf = normal_form(p, G);
    for (const auto& t : nf.terms()) {
        for (const auto& e : G.elements) {
            CHECK(!e.leading_monomial(G.order).divides(t.mono));
        }
    }
    CHECK(normal_form(p - nf, G).is_zero());
}

TEST_CASE("hankel memberships") {
    auto s = fixtures::section3<GF>(kGF);
    auto I2M5 = minor_ideal(s.M5, 2);
    auto I3M4 = minor_ideal(s.M4, 3);
    auto G25 = buchberger(I2M5, kGrev);
    auto G34 = buchberger(I3M4, kGrev);

    // Every 3-minor of M4 lies in I_2(M5).
    for (const auto& m : s.M4.minors(3)) CHECK(normal_form(m, G25).is_zero());
    // The displayed cross-minor combination d5 lies in I_3(M4).
    CHECK(normal_form(s.d[5], G34).is_zero());
    // Degree-1 elements cannot lie in an ideal generated in degree 3.
    CHECK(!ideal_membership(parse_poly<GF>(s.ring, "a1"), G34));
}

TEST_CASE("membership of random combinations") {
    auto M = generic_matrix<GF>(2, 3, kGF);
    auto I = minor_ideal(M, 2);
    auto G = buchberger(I, kGrev);
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(0, 5);
    GF f(kGF);
    for (int it = 0; it < 25; ++it) {
        PolyGF acc = PolyGF::zero(M.ring());
        for (const auto& g : I.generators()) {
            PolyGF h = PolyGF::variable(M.ring(), static_cast<std::size_t>(var(rng))) +
                       PolyGF::constant(M.ring(), coeff(rng));
            acc = acc + h.scaled(f.from_int(coeff(rng))) * g;
        }
        CHECK(ideal_membership(acc, G));
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    auto s = fixtures::section3<GF>(kGF);
    auto M23 = generic_matrix<GF>(2, 3, kGF);
    std::vector<Ideal<GF>> ideals{minor_ideal(M23, 2), minor_ideal(s.M3, 3)};
    std::mt19937 rng(99);
    for (const auto& I : ideals) {
        auto reference = buchberger(I, kGrev);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            auto gens = I.generators();
            std::shuffle(gens.begin(), gens.end(), rng);
            auto G = buchberger(Ideal<GF>(I.ring(), gens), kGrev);
            CHECK(G.elements == reference.elements);
        }
    }
}

TEST_CASE("intersection of coordinate ideals") {
    auto R = make_ring({"x", "y"}, kGF);
    auto I = ideal_of(R, {"x"});
    auto J = ideal_of(R, {"y"});
    auto K = ideal_intersection(I, J);
    REQUIRE(K.generators().size() == 1);
    CHECK(K.generators()[0] == parse_poly<GF>(R, "x*y"));
}

TEST_CASE("intersection with itself returns the same reduced basis") {
    auto M = generic_matrix<GF>(2, 3, kGF);
    auto I = minor_ideal(M, 2);
    auto K = ideal_intersection(I, I);
    CHECK(buchberger(K, kGrev).elements == buchberger(I, kGrev).elements);
}

TEST_CASE("intersection generators lie in both ideals and cover the product") {
    auto s = fixtures::section3<GF>(kGF);
    auto I = Ideal<GF>(s.ring, {s.delta(1, 2), s.delta(1, 3)});
    auto J = Ideal<GF>(s.ring, {s.delta(2, 3), s.d[1]});
    auto K = ideal_intersection(I, J);
    auto GI = buchberger(I, kGrev);
    auto GJ = buchberger(J, kGrev);
    auto GK = buchberger(K, kGrev);
    CHECK(!K.generators().empty());
    for (const auto& g : K.generators()) {
        CHECK(normal_form(g, GI).is_zero());
        CHECK(normal_form(g, GJ).is_zero());
    }
    for (const auto& f : I.generators()) {
        for (const auto& g : J.generators()) CHECK(normal_form(f * g, GK).is_zero());
    }
}

TEST_CASE("krull dimension basics") {
    // Hypersurface: generic 2x2 determinant in four variables.
    auto M = generic_matrix<GF>(2, 2, kGF);
    auto res = krull_dimension(minor_ideal(M, 2), kGrev);
    CHECK(res.dim == 3);
    CHECK(res.witness.size() == 3);

    // Single coordinate.
    auto R = make_ring({"x1", "x2", "x3", "x4", "x5"}, kGF);
    CHECK(krull_dimension(ideal_of(R, {"x1"}), kGrev).dim == 4);

    // Unit ideal convention.
    auto unit = krull_dimension(ideal_of(R, {"3"}), kGrev);
    CHECK(unit.dim == -1);
    CHECK(unit.unit_ideal);
    CHECK(unit.witness.empty());

    // Zero ideal: the full ring.
    CHECK(krull_dimension(Ideal<GF>(R), kGrev).dim == 5);
}

TEST_CASE("dimension of the hankel minor quotients") {
    auto s = fixtures::section3<GF>(kGF);
    auto res = krull_dimension(minor_ideal(s.M3, 3), kGrev);
    CHECK(res.dim == 6);
    // Witness independence: no leading term supported inside the witness.
    auto G = buchberger(minor_ideal(s.M3, 3), kGrev);
    for (const auto& e : G.elements) {
        const Monomial& lm = e.leading_monomial(kGrev);
        bool inside = true;
        for (std::size_t i = 0; i < s.ring->nvars(); ++i) {
            if (lm.exp(i) != 0 &&
                std::find(res.witness.begin(), res.witness.end(), s.ring->vars().name(i)) ==
                    res.witness.end()) {
                inside = false;
            }
        }
        CHECK(!inside);
    }
    CHECK(height(minor_ideal(s.M3, 3), kGrev) == 4);
    CHECK(height(minor_ideal(s.M4, 3), kGrev) == 4);
}

TEST_CASE("dimension oracle on small generic matrices") {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= m; ++n) {
            for (std::size_t t = 1; t <= n; ++t) {
                auto M = generic_matrix<GF>(m, n, kGF);
                auto res = krull_dimension(minor_ideal(M, t), kGrev);
                int expected = static_cast<int>((m + n - t + 1) * (t - 1));
                CHECK(res.dim == expected);
            }
        }
    }
}

TEST_CASE("leading term dimension bounds") {
    auto R = make_ring({"x", "y"}, kGF);
    std::vector<PolyGF> A{parse_poly<GF>(R, "x")};
    CHECK(lt_dimension_bound(A, kGrev) == 1);
    CHECK(lt_dimension_bound_restricted(A, kGrev) == 0);

    auto f = fixtures::first_two_columns<GF>(kGF);
    auto mins = f.N.minors(2);
    // In the eight variables that occur, the bound is 3; over the full
    // ten-variable ring it is 5.
    CHECK(occurring_variable_count(mins) == 8);
    CHECK(lt_dimension_bound_restricted(mins, kGrev) == 3);
    CHECK(lt_dimension_bound(mins, kGrev) == 5);

    // For a full reduced basis the ambient bound is the exact dimension.
    auto s = fixtures::section3<GF>(kGF);
    auto G = buchberger(minor_ideal(s.M3, 3), kGrev);
    CHECK(lt_dimension_bound(G.elements, kGrev) == 6);

    // Lemma direction on random small sets: the bound dominates the true
    // dimension of the generated ideal.
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> var(0, 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int it = 0; it < 10; ++it) {
        std::vector<PolyGF> gens;
        for (int k = 0; k < 2; ++k) {
            PolyGF p = PolyGF::variable(R, static_cast<std::size_t>(var(rng)));
            if (coin(rng)) p = p * p + PolyGF::variable(R, static_cast<std::size_t>(var(rng)));
            gens.push_back(p);
        }
        int bound = lt_dimension_bound(gens, kGrev);
        auto res = krull_dimension(Ideal<GF>(R, gens), kGrev);
        CHECK(bound >= res.dim);
    }
}

TEST_CASE("ambient height of the two column minors") {
    auto f = fixtures::first_two_columns<GF>(kGF);
    auto I = Ideal<GF>(f.ring, f.N.minors(2));
    CHECK(height(I, kGrev) == 5);
}

TEST_CASE("budgets fail loudly") {
    auto s = fixtures::section3<GF>(kGF);
    auto I = minor_ideal(s.M3, 3);
    GbBudget tiny;
    tiny.max_pairs = 2;
    CHECK_THROWS_AS(buchberger(I, kGrev, tiny), ResourceExhaustedError);
    GbBudget tiny_steps;
    tiny_steps.max_steps = 10;
    CHECK_THROWS_AS(buchberger(I, kGrev, tiny_steps), ResourceExhaustedError);
}

TEST_CASE("on disk cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "detideal-test-cache";
    fs::remove_all(dir);
    GbCache cache(dir);

    auto M = generic_matrix<GF>(2, 3, kGF);
    auto I = minor_ideal(M, 2);
    auto first = cached_buchberger(I, kGrev, GbBudget{}, &cache);
    CHECK(!first.stats.from_cache);
    auto second = cached_buchberger(I, kGrev, GbBudget{}, &cache);
    CHECK(second.stats.from_cache);
    CHECK(second.elements == first.elements);

    // Shuffled generators share the entry.
    auto gens = I.generators();
    std::reverse(gens.begin(), gens.end());
    auto third = cached_buchberger(Ideal<GF>(M.ring(), gens), kGrev, GbBudget{}, &cache);
    CHECK(third.stats.from_cache);
    CHECK(third.elements == first.elements);

    // A different order misses.
    auto lex = cached_buchberger(I, MonomialOrder::lex(), GbBudget{}, &cache);
    CHECK(!lex.stats.from_cache);

    // Corrupt every entry: loads degrade to recomputation, not wrong output.
    for (const auto& f : fs::directory_iterator(dir)) {
        std::ofstream out(f.path(), std::ios::trunc);
        out << "garbage";
    }
    auto fourth = cached_buchberger(I, kGrev, GbBudget{}, &cache);
    CHECK(!fourth.stats.from_cache);
    CHECK(fourth.elements == first.elements);
    fs::remove_all(dir);
}

TEST_CASE("rational field agrees with the prime field on a small basis") {
    auto Rq = make_ring({"x", "y"}, FieldConfig::rationals());
    std::vector<PolyQQ> gens{parse_poly<QQ>(Rq, "2*x^2 - y"), parse_poly<QQ>(Rq, "3*y^2 - 1")};
    auto Gq = buchberger(Ideal<QQ>(Rq, gens), MonomialOrder::lex());
    REQUIRE(Gq.elements.size() == 2);
    CHECK(Gq.elements[0] == parse_poly<QQ>(Rq, "y^2 - 1/3"));
    CHECK(Gq.elements[1] == parse_poly<QQ>(Rq, "x^2 - 1/2*y"));
    CHECK(groebner_certificate(Gq));
}
