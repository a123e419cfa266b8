// Python bindings.  Every operation takes and returns plain strings or small
// containers so the module has no wrapper classes to keep alive; polynomials
// cross the boundary in the same text syntax the CLI and JSON files use.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detideal/fixtures.hpp"
#include "detideal/gb_cache.hpp"
#include "detideal/groebner.hpp"
#include "detideal/json_io.hpp"
#include "detideal/specialize.hpp"
#include "detideal/verify.hpp"

namespace py = pybind11;
using namespace detideal;

namespace {

MonomialOrder order_from(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    throw DomainError("unknown order \"" + name + "\" (expected lex or grevlex)");
}

// Dispatch a generic lambda on the runtime field kind.
template <class Fn>
auto with_field(const FieldConfig& fc, Fn&& fn) {
    if (fc.kind == FieldKind::Rationals) return fn.template operator()<QQ>();
    return fn.template operator()<GF>();
}

template <class F>
Ideal<F> build_ideal(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial<F>> ps;
    for (const auto& g : gens) ps.push_back(parse_poly<F>(R, g));
    return Ideal<F>(R, std::move(ps));
}

std::vector<std::string> groebner_basis(const std::vector<std::string>& vars,
                                        const std::string& field,
                                        const std::vector<std::string>& gens,
                                        const std::string& order) {
    FieldConfig fc = FieldConfig::parse(field);
    MonomialOrder ord = order_from(order);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        auto gb = buchberger(build_ideal<F>(R, gens), ord);
        std::vector<std::string> out;
        for (const auto& e : gb.elements) out.push_back(to_string(e, ord));
        return out;
    });
}

int dimension(const std::vector<std::string>& vars, const std::string& field,
              const std::vector<std::string>& gens, const std::string& order) {
    FieldConfig fc = FieldConfig::parse(field);
    MonomialOrder ord = order_from(order);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        return krull_dimension(build_ideal<F>(R, gens), ord).dim;
    });
}

int height_of(const std::vector<std::string>& vars, const std::string& field,
              const std::vector<std::string>& gens, const std::string& order) {
    FieldConfig fc = FieldConfig::parse(field);
    MonomialOrder ord = order_from(order);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() { return height(build_ideal<F>(R, gens), ord); });
}

std::vector<std::string> minors_of(const std::vector<std::vector<std::string>>& rows,
                                   const std::vector<std::string>& vars,
                                   const std::string& field, std::size_t t) {
    FieldConfig fc = FieldConfig::parse(field);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        if (rows.empty()) throw DomainError("matrix needs at least one row");
        PolyMatrix<F> M(R, rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.front().size()) throw DomainError("ragged matrix");
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                M.set(i, j, parse_poly<F>(R, rows[i][j]));
            }
        }
        std::vector<std::string> out;
        for (const auto& p : M.minors(t)) out.push_back(to_string(p, MonomialOrder::grevlex()));
        return out;
    });
}

std::string normal_form_of(const std::string& poly, const std::vector<std::string>& vars,
                           const std::string& field, const std::vector<std::string>& gens,
                           const std::string& order) {
    FieldConfig fc = FieldConfig::parse(field);
    MonomialOrder ord = order_from(order);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        auto gb = buchberger(build_ideal<F>(R, gens), ord);
        return to_string(normal_form(parse_poly<F>(R, poly), gb), ord);
    });
}

bool is_member(const std::string& poly, const std::vector<std::string>& vars,
               const std::string& field, const std::vector<std::string>& gens,
               const std::string& order) {
    FieldConfig fc = FieldConfig::parse(field);
    MonomialOrder ord = order_from(order);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        auto gb = buchberger(build_ideal<F>(R, gens), ord);
        return normal_form(parse_poly<F>(R, poly), gb).is_zero();
    });
}

std::vector<std::string> intersect(const std::vector<std::string>& vars,
                                   const std::string& field,
                                   const std::vector<std::string>& first,
                                   const std::vector<std::string>& second) {
    FieldConfig fc = FieldConfig::parse(field);
    RingPtr R = make_ring(vars, fc);
    return with_field(fc, [&]<class F>() {
        auto K = ideal_intersection(build_ideal<F>(R, first), build_ideal<F>(R, second));
        std::vector<std::string> out;
        for (const auto& p : K.generators()) out.push_back(to_string(p, MonomialOrder::grevlex()));
        return out;
    });
}

py::dict check_prime_sequence(std::size_t m, std::size_t n, std::size_t t,
                              const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& pairs,
                              const std::string& field) {
    std::vector<std::pair<Position, Position>> ps;
    for (const auto& [a, b] : pairs) {
        ps.push_back({Position{a.first, a.second}, Position{b.first, b.second}});
    }
    IdentificationSequence seq(m, n, t, std::move(ps));
    FieldConfig fc = FieldConfig::parse(field);
    ConditionReport rep = with_field(fc, [&]<class F>() {
        return check_theorem<F>(seq, fc, MonomialOrder::grevlex(), GbBudget{}, nullptr);
    });
    py::dict d;
    d["cond_i"] = rep.cond_i;
    d["cond_ii"] = rep.cond_ii;
    d["cond_iii"] = rep.cond_iii;
    d["dim"] = rep.dim_full;
    d["dim_plus_corner"] = rep.dim_plus_corner;
    d["predicted_dim"] = rep.predicted_dim;
    d["all_hold"] = rep.all_hold;
    d["dim_consistent"] = rep.dim_consistent;
    return d;
}

std::string verify_claims(const std::optional<std::vector<std::string>>& ids, bool deterministic,
                          bool run_qq) {
    VerifyOptions opt;
    opt.deterministic = deterministic;
    opt.run_qq = run_qq;
    std::vector<std::string> want;
    if (ids) {
        want = *ids;
    } else {
        for (const auto& entry : claim_catalog()) want.push_back(entry.first);
    }
    auto report = run_claims(want, opt);
    return report_to_json(report).dump(2);
}

}  // namespace

PYBIND11_MODULE(_detideal, mod) {
    mod.doc() = "exact determinantal ideal computations";
    mod.def("groebner_basis", &groebner_basis, py::arg("vars"), py::arg("field"),
            py::arg("generators"), py::arg("order") = "grevlex",
            "Reduced Groebner basis as polynomial strings.");
    mod.def("dimension", &dimension, py::arg("vars"), py::arg("field"), py::arg("generators"),
            py::arg("order") = "grevlex", "Krull dimension of the quotient ring.");
    mod.def("height", &height_of, py::arg("vars"), py::arg("field"), py::arg("generators"),
            py::arg("order") = "grevlex", "Height of the ideal (nvars minus dimension).");
    mod.def("minors", &minors_of, py::arg("rows"), py::arg("vars"), py::arg("field"),
            py::arg("t"), "All t x t minors of a matrix of polynomial strings.");
    mod.def("normal_form", &normal_form_of, py::arg("poly"), py::arg("vars"), py::arg("field"),
            py::arg("generators"), py::arg("order") = "grevlex",
            "Normal form of a polynomial modulo the ideal.");
    mod.def("is_member", &is_member, py::arg("poly"), py::arg("vars"), py::arg("field"),
            py::arg("generators"), py::arg("order") = "grevlex",
            "Whether the polynomial lies in the ideal.");
    mod.def("intersect", &intersect, py::arg("vars"), py::arg("field"), py::arg("first"),
            py::arg("second"), "Generators of the intersection of two ideals.");
    mod.def("check_prime_sequence", &check_prime_sequence, py::arg("m"), py::arg("n"),
            py::arg("t"), py::arg("pairs"), py::arg("field") = "gf:32003",
            "Evaluate conditions (i)-(iii) for an identification sequence; pairs are "
            "((alpha_row, alpha_col), (beta_row, beta_col)) with 1-based positions.");
    mod.def("verify_claims", &verify_claims, py::arg("ids") = std::nullopt,
            py::arg("deterministic") = true, py::arg("run_qq") = true,
            "Run the named claims (all when ids is None) and return the JSON report.");

    py::register_exception<ResourceExhaustedError>(mod, "ResourceExhausted", PyExc_RuntimeError);
}
