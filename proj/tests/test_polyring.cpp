#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detideal/poly_io.hpp"
#include "detideal/polynomial.hpp"

using namespace detideal;

namespace {

RingPtr xy_ring(FieldConfig f = FieldConfig::prime(32003)) { return make_ring({"x", "y"}, f); }

RingPtr hankel_ring(FieldConfig f = FieldConfig::prime(32003)) {
    return make_ring({"a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"}, f);
}

PolyGF gfp(const RingPtr& r, const std::string& s) { return parse_poly<GF>(r, s); }

// Uniform random polynomial with small integer coefficients, for the ring
// axiom and cross-field properties.
template <class F>
Polynomial<F> random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 6, int max_exp = 3,
                          int coeff_span = 10) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-coeff_span, coeff_span);
    std::vector<Term<F>> terms;
    int k = nterms(rng);
    typename F::Elem zero = F(ring->field()).zero();
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->nvars());
        for (std::size_t v = 0; v < ring->nvars(); ++v) m.set(v, static_cast<std::uint8_t>(exp(rng)));
        terms.push_back({F(ring->field()).from_int(coeff(rng)), m});
    }
    (void)zero;
    return Polynomial<F>(ring, std::move(terms));
}

}  // namespace

TEST_CASE("field config validation") {
    CHECK_THROWS_AS(FieldConfig::prime(4), DomainError);
    CHECK_THROWS_AS(FieldConfig::prime(2), DomainError);
    CHECK(FieldConfig::prime(32003).to_string() == "gf:32003");
    CHECK(FieldConfig::rationals().to_string() == "q");
    CHECK(FieldConfig::parse("gf:32003") == FieldConfig::prime(32003));
    CHECK(FieldConfig::parse("q") == FieldConfig::rationals());
    CHECK_THROWS_AS(FieldConfig::parse("gf:abc"), DomainError);
}

TEST_CASE("prime field arithmetic") {
    GF f(FieldConfig::prime(32003));
    CHECK(f.from_int(-1) == 32002);
    CHECK(f.add(32002, 1) == 0);
    CHECK(f.mul(f.from_int(1234), f.inv(f.from_int(1234))) == 1);
    CHECK(f.from_decimal_string("123456789123456789") ==
          f.from_int(123456789123456789LL % 32003));
    CHECK_THROWS_AS(f.inv(0), DomainError);
    CHECK(f.to_string(f.from_int(-5)) == "-5");
    CHECK(f.to_string(f.from_int(5)) == "5");
}

TEST_CASE("rational arithmetic") {
    QQ f(FieldConfig::rationals());
    auto half = f.from_fraction(1, 2);
    CHECK(f.add(half, half) == f.one());
    CHECK(f.to_string(f.from_fraction(-10, 4)) == "-5/2");
    CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
}

TEST_CASE("variable set validation") {
    CHECK_THROWS_AS(VariableSet(std::vector<std::string>{}), DomainError);
    CHECK_THROWS_AS(VariableSet({"x", "x"}), DomainError);
    CHECK_THROWS_AS(VariableSet({"1x"}), DomainError);
    VariableSet v({"x", "y"});
    CHECK(v.index("y") == 1);
    CHECK_THROWS_AS(v.index("z"), DomainError);
}

TEST_CASE("monomial arithmetic and guards") {
    Monomial a(3), b(3);
    a.set(0, 2);
    b.set(0, 1);
    b.set(2, 4);
    Monomial p = a * b;
    CHECK(p.exp(0) == 3);
    CHECK(p.degree() == 7);
    CHECK(b.divides(p));
    CHECK((p / b) == a);
    CHECK_THROWS_AS(b / a, DomainError);
    CHECK(a.lcm(b).degree() == 6);
    CHECK(a.gcd(b).exp(0) == 1);
    Monomial big(2);
    big.set(0, 200);
    CHECK_THROWS_AS(big * big, CapacityError);
}

TEST_CASE("grevlex puts a2^2 above a1*a3") {
    // With precedence a1 > a2 > a3 > a4 > a5 > b1 > ... > b5 the tie-break
    // by the last nonzero entry of the exponent difference makes a2^2 the
    // larger of the two degree-2 monomials.
    auto R = hankel_ring();
    MonomialOrder ord = MonomialOrder::grevlex();
    Monomial a2sq(R->nvars()), a1a3(R->nvars());
    a2sq.set(1, 2);
    a1a3.set(0, 1);
    a1a3.set(2, 1);
    CHECK(ord.cmp(a2sq, a1a3) > 0);
    CHECK(ord.cmp(a1a3, a2sq) < 0);
    CHECK(ord.cmp(a2sq, a2sq) == 0);
}

TEST_CASE("degree dominates in grevlex") {
    auto R = xy_ring();
    MonomialOrder ord = MonomialOrder::grevlex();
    Monomial x3(2), xy(2);
    x3.set(0, 3);
    xy.set(0, 1);
    xy.set(1, 1);
    CHECK(ord.cmp(x3, xy) > 0);
}

TEST_CASE("block order elimination property") {
    // Ring [x, t] with the last variable t eliminated: any t-containing
    // monomial beats any power of x.
    auto R = make_ring({"x", "t"}, FieldConfig::prime(32003));
    MonomialOrder ord = MonomialOrder::block(1, MonomialOrder::lex(), MonomialOrder::grevlex());
    Monomial xt(2), x5(2);
    xt.set(0, 1);
    xt.set(1, 1);
    x5.set(0, 5);
    CHECK(ord.cmp(xt, x5) > 0);
    CHECK(ord.cmp(x5, xt) < 0);
}

TEST_CASE("lex compares leading variable first") {
    MonomialOrder ord = MonomialOrder::lex();
    Monomial x(2), y4(2);
    x.set(0, 1);
    y4.set(1, 4);
    CHECK(ord.cmp(x, y4) > 0);
}

TEST_CASE("order properties on random monomials") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> exp(0, 4);
    auto rand_mono = [&](std::size_t n) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::uint8_t>(exp(rng)));
        return m;
    };
    for (MonomialOrder ord : {MonomialOrder::lex(), MonomialOrder::grevlex(),
                              MonomialOrder::block(2, MonomialOrder::lex(), MonomialOrder::grevlex())}) {
        for (int it = 0; it < 300; ++it) {
            Monomial a = rand_mono(5), b = rand_mono(5), c = rand_mono(5);
            // Antisymmetry.
            CHECK(ord.cmp(a, b) == -ord.cmp(b, a));
            // Transitivity of the <= relation.
            if (ord.cmp(a, b) <= 0 && ord.cmp(b, c) <= 0) CHECK(ord.cmp(a, c) <= 0);
            // Compatibility with multiplication.
            CHECK(ord.cmp(a * c, b * c) == ord.cmp(a, b));
            // Orders refine divisibility.
            if (a.divides(b) && a != b) CHECK(ord.cmp(a, b) < 0);
            // Degree rule for grevlex.
            if (ord.kind() == OrderKind::GrevLex && a.degree() > b.degree()) CHECK(ord.cmp(a, b) > 0);
        }
    }
}

TEST_CASE("polynomial parse and print round trip") {
    auto R = hankel_ring();
    PolyGF d12 = gfp(R, "a1*b2 - a2*b1");
    // Canonical grevlex descending puts the b1-containing term first; under
    // lex the familiar spelling comes back.
    CHECK(to_string(d12) == "-a2*b1 + a1*b2");
    CHECK(to_string(d12, MonomialOrder::lex()) == "a1*b2 - a2*b1");
    CHECK(gfp(R, to_string(d12)) == d12);
    PolyGF p = gfp(R, "(a1 + b1)^2 - a1^2 - b1^2 - 2*a1*b1");
    CHECK(p.is_zero());
    CHECK(to_string(p) == "0");
    CHECK_THROWS_AS(gfp(R, "a1 +"), ParseError);
    CHECK_THROWS_AS(gfp(R, "c9"), ParseError);
    CHECK_THROWS_AS(gfp(R, "a1 a2"), ParseError);
    try {
        gfp(R, "a1 * ");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("rational literals parse in both fields") {
    auto Rq = xy_ring(FieldConfig::rationals());
    PolyQQ p = parse_poly<QQ>(Rq, "1/2*x + 1/2*x");
    CHECK(p == parse_poly<QQ>(Rq, "x"));
    auto Rp = xy_ring();
    PolyGF q = gfp(Rp, "1/2*x + 1/2*x");
    CHECK(q == gfp(Rp, "x"));
    CHECK_THROWS_AS(gfp(Rp, "x/0"), ParseError);
}

TEST_CASE("addition identities") {
    auto R = hankel_ring();
    PolyGF x = gfp(R, "a1"), y = gfp(R, "b1");
    CHECK((x + y) + (x - y) == gfp(R, "2*a1"));
    CHECK(x + PolyGF::zero(R) == x);
    // Antisymmetry of the 2x2 minor.
    CHECK(gfp(R, "a1*b2 - a2*b1") + gfp(R, "a2*b1 - a1*b2") == PolyGF::zero(R));
}

TEST_CASE("multiplication identities") {
    auto R = xy_ring();
    PolyGF x = gfp(R, "x"), y = gfp(R, "y");
    CHECK((x + y) * (x - y) == gfp(R, "x^2 - y^2"));
    PolyGF p = gfp(R, "3*x^2*y - 7*y + 2");
    CHECK(p * PolyGF::constant(R, 1) == p);
    auto H = hankel_ring();
    PolyGF d12 = gfp(H, "a1*b2 - a2*b1");
    CHECK(d12 * d12 == gfp(H, "a1^2*b2^2 - 2*a1*a2*b1*b2 + a2^2*b1^2"));
}

TEST_CASE("leading terms under grevlex match the hankel conventions") {
    auto R = hankel_ring();
    MonomialOrder ord = MonomialOrder::grevlex();
    GF f(R->field());

    PolyGF p = gfp(R, "a1*a3 - a2^2");
    auto lt = p.leading_term(ord);
    CHECK(lt.mono.to_string(R->vars()) == "a2^2");
    CHECK(lt.coeff == f.from_int(-1));

    PolyGF q = gfp(R, "a3*b2 - a4*b1");
    auto lq = q.leading_term(ord);
    CHECK(lq.mono.to_string(R->vars()) == "a4*b1");
    CHECK(lq.coeff == f.from_int(-1));

    PolyGF m = gfp(R, "3*a1*b1");
    CHECK(m.leading_term(ord).coeff == f.from_int(3));
    CHECK(m.leading_monomial(ord).to_string(R->vars()) == "a1*b1");

    CHECK_THROWS_AS(PolyGF::zero(R).leading_term(ord), ZeroPolynomialError);
}

TEST_CASE("ring mismatch is rejected") {
    auto R1 = xy_ring();
    auto R2 = hankel_ring();
    CHECK_THROWS_AS(gfp(R1, "x") + gfp(R2, "a1"), RingMismatchError);
    // Content-equal rings interoperate.
    auto R3 = xy_ring();
    CHECK(gfp(R1, "x + y") + gfp(R3, "x") == gfp(R1, "2*x + y"));
}

TEST_CASE("ring axioms on random polynomials") {
    auto R = make_ring({"x", "y", "z"}, FieldConfig::prime(32003));
    std::mt19937 rng(777);
    for (int it = 0; it < 60; ++it) {
        PolyGF p = random_poly<GF>(R, rng);
        PolyGF q = random_poly<GF>(R, rng);
        PolyGF r = random_poly<GF>(R, rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == PolyGF::zero(R));
    }
}

TEST_CASE("prime field agrees with rationals mod p") {
    auto Rp = make_ring({"x", "y", "z"}, FieldConfig::prime(32003));
    auto Rq = make_ring({"x", "y", "z"}, FieldConfig::rationals());
    std::mt19937 rng_p(999), rng_q(999);
    for (int it = 0; it < 40; ++it) {
        // Identical seeds replay the same coefficient stream in both fields.
        PolyGF p1 = random_poly<GF>(Rp, rng_p);
        PolyGF p2 = random_poly<GF>(Rp, rng_p);
        PolyQQ q1 = random_poly<QQ>(Rq, rng_q);
        PolyQQ q2 = random_poly<QQ>(Rq, rng_q);
        PolyQQ prod = q1 * q2 + q1 - q2;
        PolyGF prod_p = p1 * p2 + p1 - p2;
        // Reduce the rational result mod p by re-parsing its text.
        PolyGF reduced = gfp(Rp, to_string(prod) == "0" ? "0*x" : to_string(prod));
        CHECK(reduced == prod_p);
    }
}

TEST_CASE("substitution and variable mapping") {
    auto R = make_ring({"x", "y"}, FieldConfig::prime(32003));
    PolyGF p = gfp(R, "x^2 + x*y + 1");
    CHECK(p.substitute(0, gfp(R, "y")) == gfp(R, "2*y^2 + 1"));
    CHECK(p.substitute(1, PolyGF::zero(R)) == gfp(R, "x^2 + 1"));

    auto S = make_ring({"u", "v", "x"}, FieldConfig::prime(32003));
    PolyGF moved = p.map_variables(S, {2, 0});
    CHECK(moved == parse_poly<GF>(S, "x^2 + x*u + 1"));
    CHECK_THROWS_AS(p.map_variables(S, {0, 0}), DomainError);
}

TEST_CASE("support reports occurring variables") {
    auto R = hankel_ring();
    PolyGF p = gfp(R, "a1*b2 - a2*b1 + a5");
    auto s = p.support();
    REQUIRE(s.size() == 5);
    CHECK(R->vars().name(s[0]) == "a1");
    CHECK(R->vars().name(s[4]) == "b2");
}
