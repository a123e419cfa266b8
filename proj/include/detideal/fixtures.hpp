#pragma once

#include <map>
#include <string>
#include <vector>

#include "detideal/poly_io.hpp"
#include "detideal/polymatrix.hpp"
#include "detideal/specialize.hpp"

namespace detideal {
namespace fixtures {

// Build a matrix over ring from entry expressions; the workhorse for the
// named fixture matrices below.
template <class F>
PolyMatrix<F> matrix_of(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Polynomial<F>>> parsed;
    parsed.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Polynomial<F>> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(parse_poly<F>(ring, e));
        parsed.push_back(std::move(r));
    }
    return PolyMatrix<F>::from_rows(ring, parsed);
}

template <class F>
Polynomial<F> det3(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) {
    return matrix_of<F>(ring, rows).determinant();
}

// Everything the section-3 verifications touch: the Hankel matrices, the
// 2x2 minors Delta_ij of M5, the named 3x3 determinants d1..d6 and their
// companions, the twelve bordered 5x5 matrices N/V/W, and the sigma/tau
// variable involutions.
template <class F>
struct Section3 {
    RingPtr ring;
    PolyMatrix<F> M5, M4, M3;
    std::vector<Polynomial<F>> delta10;                 // minors(M5, 2), lexicographic
    std::vector<Polynomial<F>> d;                       // d[1]..d[6]; d[0] unused zero
    Polynomial<F> m1, mbb;                              // recurring 3x3 dets of the expansions
    // 3x3 minors of M4 entering the delta * Delta_ij identities, as
    // (row set | column set) of M4: m2 = (124|123), m3 = (123|134),
    // ma = (123|124), m4 = (124|124), m5 = (124|134).
    Polynomial<F> m2, m3, ma, m4, m5;
    std::vector<PolyMatrix<F>> N, V, W;                 // four 5x5 matrices each
    std::map<std::string, std::string> sigma, tau;

    // Delta_ij with 1 <= i < j <= 5, from the lexicographic minor list.
    const Polynomial<F>& delta(int i, int j) const {
        return delta10.at(static_cast<std::size_t>((i - 1) * 5 - i * (i - 1) / 2 + (j - i - 1)));
    }
};

template <class F>
Section3<F> section3(const FieldConfig& field) {
    HankelTriple<F> T = hankel_matrices<F>(field);
    RingPtr R = T.M5.ring();
    Section3<F> s{R,
                  std::move(T.M5),
                  std::move(T.M4),
                  std::move(T.M3),
                  {},
                  {},
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  Polynomial<F>::zero(R),
                  {},
                  {},
                  {},
                  {},
                  {}};
    s.delta10 = s.M5.minors(2);

    s.d.assign(7, Polynomial<F>::zero(R));
    s.d[1] = det3<F>(R, {{"a1", "a2", "a3"}, {"a2", "a3", "a4"}, {"a3", "a4", "a5"}});
    s.d[2] = det3<F>(R, {{"a1", "a2", "a3"}, {"a2", "a3", "a4"}, {"b3", "b4", "b5"}});
    s.d[3] = det3<F>(R, {{"a1", "a2", "a3"}, {"a3", "a4", "a5"}, {"b2", "b3", "b4"}});
    s.d[4] = det3<F>(R, {{"a2", "a3", "a4"}, {"a3", "a4", "a5"}, {"b1", "b2", "b3"}});
    s.d[5] = det3<F>(R, {{"a1", "a2", "a3"}, {"a3", "a4", "a5"}, {"b1", "b2", "b3"}});
    s.d[6] = det3<F>(R, {{"a1", "a2", "a3"}, {"a3", "a4", "a5"}, {"b3", "b4", "b5"}});
    s.m1 = det3<F>(R, {{"a1", "a2", "a3"}, {"a2", "a3", "a4"}, {"b1", "b2", "b3"}});
    s.mbb = det3<F>(R, {{"a1", "a2", "a3"}, {"b1", "b2", "b3"}, {"b2", "b3", "b4"}});
    s.m2 = det3<F>(R, {{"a1", "a2", "a3"}, {"a2", "a3", "a4"}, {"b2", "b3", "b4"}});
    s.m3 = det3<F>(R, {{"a1", "a3", "a4"}, {"a2", "a4", "a5"}, {"b1", "b3", "b4"}});
    s.ma = det3<F>(R, {{"a1", "a2", "a4"}, {"a2", "a3", "a5"}, {"b1", "b2", "b4"}});
    s.m4 = det3<F>(R, {{"a1", "a2", "a4"}, {"a2", "a3", "a5"}, {"b2", "b3", "b5"}});
    s.m5 = det3<F>(R, {{"a1", "a3", "a4"}, {"a2", "a4", "a5"}, {"b2", "b4", "b5"}});

    // The four bordered matrices certifying Delta_12 * {d1, d2, d3, tau(d4)}
    // membership; rows 1-3 are shared, rows 4-5 vary.
    auto bordered = [&](const std::vector<std::string>& r4, const std::vector<std::string>& r5) {
        return matrix_of<F>(R, {{"b1", "b2", "b1", "b2", "b3"},
                                {"a1", "a2", "0", "0", "0"},
                                {"0", "0", "a1", "a2", "a3"},
                                r4,
                                r5});
    };
    s.N.push_back(bordered({"a2", "a3", "a2", "a3", "a4"}, {"a3", "a4", "a3", "a4", "a5"}));
    s.N.push_back(bordered({"a2", "a3", "a2", "a3", "a4"}, {"b3", "b4", "b3", "b4", "b5"}));
    s.N.push_back(bordered({"a3", "a4", "a3", "a4", "a5"}, {"b2", "b3", "b2", "b3", "b4"}));
    s.N.push_back(bordered({"b2", "b3", "b2", "b3", "b4"}, {"b3", "b4", "b3", "b4", "b5"}));

    // The Delta_23 family: same shape shifted one index up, wrapped border.
    auto bordered23 = [&](const std::vector<std::string>& r5) {
        return matrix_of<F>(R, {{"b2", "b3", "b2", "b3", "b1"},
                                {"a2", "a3", "0", "0", "0"},
                                {"0", "0", "a2", "a3", "a1"},
                                {"a3", "a4", "a3", "a4", "a2"},
                                r5});
    };
    s.V.push_back(bordered23({"a4", "a5", "a4", "a5", "a3"}));
    s.V.push_back(bordered23({"b4", "b5", "b4", "b5", "b3"}));
    s.V.push_back(bordered23({"b3", "b4", "b3", "b4", "b2"}));
    // The fourth display repeats the second verbatim.
    s.V.push_back(bordered23({"b4", "b5", "b4", "b5", "b3"}));

    // The Delta_13 family.
    auto bordered13 = [&](const std::vector<std::string>& r5) {
        return matrix_of<F>(R, {{"b1", "b3", "b1", "b3", "b2"},
                                {"a1", "a3", "0", "0", "0"},
                                {"0", "0", "a1", "a3", "a2"},
                                {"a2", "a4", "a2", "a4", "a3"},
                                r5});
    };
    s.W.push_back(bordered13({"a3", "a5", "a3", "a5", "a4"}));
    s.W.push_back(bordered13({"b3", "b5", "b3", "b5", "b4"}));
    s.W.push_back(bordered13({"b2", "b4", "b2", "b4", "b3"}));
    // The fourth display repeats the second verbatim.
    s.W.push_back(bordered13({"b3", "b5", "b3", "b5", "b4"}));

    for (int i = 1; i <= 5; ++i) {
        std::string ai = "a" + std::to_string(i), bi = "b" + std::to_string(i);
        s.sigma[ai] = "a" + std::to_string(6 - i);
        s.sigma[bi] = "b" + std::to_string(6 - i);
        s.tau[ai] = bi;
        s.tau[bi] = ai;
    }
    return s;
}

// Cor 3.2 entry data: the 6x2 matrix of the first two columns of M3 and the
// five monomials J that bound the leading-term ideal of its 2x2 minors.
template <class F>
struct EntryColumnsFixture {
    RingPtr ring;
    PolyMatrix<F> N;
    std::vector<Polynomial<F>> J;
};

template <class F>
EntryColumnsFixture<F> first_two_columns(const FieldConfig& field) {
    HankelTriple<F> T = hankel_matrices<F>(field);
    const RingPtr& R = T.M3.ring();
    PolyMatrix<F> N = T.M3.submatrix({0, 1, 2, 3, 4, 5}, {0, 1});
    std::vector<Polynomial<F>> J;
    for (const char* m : {"a2^2", "a3^2", "a4*b1", "b2^2", "b3^2"}) {
        J.push_back(parse_poly<F>(R, m));
    }
    return {R, std::move(N), std::move(J)};
}

// The eight identification pairs presenting the 6x3 catalecticant: each alpha
// sits in the first two columns and repeats the entry one row down, one
// column right.
inline IdentificationSequence catalecticant_sequence() {
    std::vector<std::pair<Position, Position>> pairs{
        {{2, 1}, {1, 2}}, {{2, 2}, {1, 3}}, {{3, 1}, {2, 2}}, {{3, 2}, {2, 3}},
        {{5, 1}, {4, 2}}, {{5, 2}, {4, 3}}, {{6, 1}, {5, 2}}, {{6, 2}, {5, 3}},
    };
    return IdentificationSequence(6, 3, 3, std::move(pairs));
}

// The two 3x3 matrices of the final remark on condition (ii): entries with
// the repeated name X are identified.
template <class F>
PolyMatrix<F> remark_matrix_first(const FieldConfig& field) {
    RingPtr R = make_ring({"a", "b", "c", "d", "e", "f", "X"}, field);
    return matrix_of<F>(R, {{"a", "X", "b"}, {"X", "c", "X"}, {"d", "e", "f"}});
}

template <class F>
PolyMatrix<F> remark_matrix_second(const FieldConfig& field) {
    RingPtr R = make_ring({"a", "b", "c", "d", "f", "X"}, field);
    return matrix_of<F>(R, {{"a", "X", "b"}, {"X", "c", "X"}, {"d", "X", "f"}});
}

}  // namespace fixtures
}  // namespace detideal
