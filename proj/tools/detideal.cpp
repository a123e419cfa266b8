// Command-line front end.  Subcommands operate on JSON ideal/matrix/sequence
// files; exit codes are 0 for success or a passing report, 1 for a negative
// mathematical answer or a failing report, 2 for malformed input, 3 for an
// exhausted computation budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "detideal/json_io.hpp"
#include "detideal/verify.hpp"

using namespace detideal;

namespace {

MonomialOrder order_from(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grevlex") return MonomialOrder::grevlex();
    throw DomainError("unknown order \"" + name + "\" (expected lex or grevlex)");
}

std::optional<FieldConfig> field_from(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return FieldConfig::parse(name);
}

template <class Fn>
int with_field(const FieldConfig& fc, Fn&& fn) {
    if (fc.kind == FieldKind::Rationals) return fn.template operator()<QQ>();
    return fn.template operator()<GF>();
}

// Shared options for the ideal-file subcommands.
struct IdealArgs {
    std::string file;
    std::string order = "grevlex";
    std::string field;
    std::string cache_dir;
};

void add_ideal_args(CLI::App* sub, IdealArgs& a) {
    sub->add_option("ideal", a.file, "ideal file (JSON)")->required();
    sub->add_option("--order", a.order, "monomial order: lex or grevlex");
    sub->add_option("--field", a.field, "coefficient field: q or gf:<p>");
    sub->add_option("--cache", a.cache_dir, "Groebner basis cache directory");
}

int cmd_gb(const IdealArgs& a) {
    IdealInput in = load_ideal_file(a.file, field_from(a.field));
    MonomialOrder ord = order_from(a.order);
    std::optional<GbCache> cache;
    if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
    return with_field(in.field, [&]<class F>() {
        auto I = instantiate_ideal<F>(in);
        auto gb = cached_buchberger(I, ord, GbBudget{}, cache ? &*cache : nullptr);
        for (const auto& e : gb.elements) std::cout << to_string(e, ord) << "\n";
        return 0;
    });
}

int cmd_dim(const IdealArgs& a, bool as_height) {
    IdealInput in = load_ideal_file(a.file, field_from(a.field));
    MonomialOrder ord = order_from(a.order);
    return with_field(in.field, [&]<class F>() {
        auto I = instantiate_ideal<F>(in);
        DimensionResult d = krull_dimension(I, ord);
        std::size_t nvars = I.ring()->nvars();
        if (as_height) {
            std::cout << static_cast<int>(nvars) - d.dim << "\n";
        } else {
            std::cout << d.dim << "\n";
        }
        if (d.unit_ideal) {
            std::cerr << "note: unit ideal (dim -1, height " << nvars + 1 << ")\n";
        } else if (!d.witness.empty() && !as_height) {
            std::cerr << "witness:";
            for (const auto& v : d.witness) std::cerr << " " << v;
            std::cerr << "\n";
        }
        return 0;
    });
}

int cmd_minors(const std::string& file, std::size_t size, const std::string& field) {
    MatrixInput m = load_matrix_file(file, field_from(field));
    return with_field(m.field, [&]<class F>() {
        auto M = instantiate_matrix<F>(m);
        for (const auto& p : M.minors(size)) std::cout << to_string(p) << "\n";
        return 0;
    });
}

int cmd_member(const std::string& poly, const IdealArgs& a) {
    IdealInput in = load_ideal_file(a.file, field_from(a.field));
    MonomialOrder ord = order_from(a.order);
    std::optional<GbCache> cache;
    if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
    return with_field(in.field, [&]<class F>() {
        auto I = instantiate_ideal<F>(in);
        auto p = parse_poly<F>(I.ring(), poly);
        auto gb = cached_buchberger(I, ord, GbBudget{}, cache ? &*cache : nullptr);
        auto nf = normal_form(p, gb);
        std::cout << to_string(nf, ord) << "\n";
        return nf.is_zero() ? 0 : 1;
    });
}

int cmd_intersect(const std::string& file1, const std::string& file2, const IdealArgs& a) {
    IdealInput in1 = load_ideal_file(file1, field_from(a.field));
    IdealInput in2 = load_ideal_file(file2, field_from(a.field));
    if (in1.vars != in2.vars || in1.field != in2.field) {
        throw DomainError("intersect: the two ideal files name different rings");
    }
    std::optional<GbCache> cache;
    if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
    return with_field(in1.field, [&]<class F>() {
        auto I = instantiate_ideal<F>(in1);
        auto J = instantiate_ideal<F>(in2);
        auto K = ideal_intersection(I, J, GbBudget{}, cache ? &*cache : nullptr);
        for (const auto& g : K.generators()) std::cout << to_string(g) << "\n";
        return 0;
    });
}

// The sequence certificate must describe this matrix: uniting the pair
// positions has to reproduce the label classes exactly.
void require_sequence_matches(const LabeledMatrix& mat, const IdentificationSequence& seq) {
    if (seq.m() != mat.m() || seq.n() != mat.n()) {
        throw DomainError("sequence shape " + std::to_string(seq.m()) + "x" +
                          std::to_string(seq.n()) + " does not match the matrix");
    }
    std::size_t mn = mat.m() * mat.n();
    detail::UnionFind uf(mn);
    auto id = [&](const Position& p) {
        return static_cast<std::size_t>(p.row - 1) * mat.n() +
               static_cast<std::size_t>(p.col - 1);
    };
    for (const auto& [alpha, beta] : seq.pairs()) uf.unite(id(alpha), id(beta));
    for (std::size_t x = 0; x < mn; ++x) {
        for (std::size_t y = x + 1; y < mn; ++y) {
            bool same_label =
                mat.label(x / mat.n(), x % mat.n()) == mat.label(y / mat.n(), y % mat.n());
            if (same_label != (uf.find(x) == uf.find(y))) {
                throw DomainError("sequence does not present this matrix's identifications");
            }
        }
    }
}

void print_report(const ConditionReport& rep) {
    std::cout << "condition (i)   " << (rep.cond_i ? "holds" : "fails") << "\n";
    std::cout << "condition (ii)  " << (rep.cond_ii ? "holds" : "fails");
    if (!rep.cond_ii) std::cout << " (stage " << rep.bad_index << ")";
    std::cout << "\n";
    std::cout << "condition (iii) " << (rep.cond_iii ? "holds" : "fails") << " (dim "
              << rep.dim_full << " vs " << rep.dim_plus_corner << " with corner minors)\n";
    std::cout << "predicted dim " << rep.predicted_dim
              << (rep.dim_consistent ? " = " : " != ") << "computed dim " << rep.dim_full << "\n";
}

int cmd_check_prime(const std::string& matrix_file, std::size_t t, const std::string& seq_file,
                    std::size_t budget, const std::string& field, const std::string& cache_dir) {
    MatrixInput m = load_matrix_file(matrix_file, field_from(field));
    LabeledMatrix mat = labeled_from_matrix(m);
    FieldConfig fc = m.field;
    std::optional<GbCache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);
    const GbCache* cp = cache ? &*cache : nullptr;
    MonomialOrder ord = MonomialOrder::grevlex();

    if (!seq_file.empty()) {
        IdentificationSequence seq = load_sequence_file(seq_file);
        if (seq.t() != t) {
            throw DomainError("sequence t = " + std::to_string(seq.t()) +
                              " does not match --t " + std::to_string(t));
        }
        require_sequence_matches(mat, seq);
        return with_field(fc, [&]<class F>() {
            ConditionReport rep = check_theorem<F>(seq, fc, ord, GbBudget{}, cp);
            print_report(rep);
            return rep.all_hold ? 0 : 1;
        });
    }

    PresentationResult pres = presentations(mat, t, budget);
    if (pres.infeasible) {
        std::cout << "no presentation exists: " << pres.reason << "\n";
        return 1;
    }
    std::size_t good = 0;
    for (const auto& seq : pres.sequences) {
        if (is_bad(seq).bad) continue;
        ++good;
        int rc = with_field(fc, [&]<class F>() {
            ConditionReport rep = check_theorem<F>(seq, fc, ord, GbBudget{}, cp);
            if (!rep.all_hold) return 1;
            std::cout << "presentation:";
            for (const auto& [alpha, beta] : seq.pairs()) {
                std::cout << " " << to_string(alpha) << "=" << to_string(beta);
            }
            std::cout << "\n";
            print_report(rep);
            return 0;
        });
        if (rc == 0) return 0;
    }
    if (pres.budget_exhausted) {
        throw ResourceExhaustedError("presentation budget of " + std::to_string(budget) +
                                     " sequences exhausted before a certificate was found");
    }
    std::cout << "searched " << pres.sequences.size() << " presentations (" << good
              << " passing conditions (i)-(ii)); none satisfies all conditions\n";
    return 1;
}

int cmd_verify(const std::vector<std::string>& claims, const std::string& report_file,
               const VerifyOptions& opt) {
    auto results = run_claims(claims, opt);
    for (const auto& r : results) {
        std::cout << r.id << " (" << r.citation << "): " << r.status;
        if (!opt.deterministic) std::cout << " [" << r.millis << " ms]";
        std::cout << "\n";
    }
    if (!report_file.empty()) {
        std::ofstream out(report_file);
        if (!out) throw DomainError("cannot write report to " + report_file);
        out << report_to_json(results).dump(2) << "\n";
    }
    for (const auto& r : results) {
        if (r.status == "fail") return 1;
    }
    for (const auto& r : results) {
        if (r.status == "budget_exhausted") return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinantal-ideal computations and claim verification"};
    app.require_subcommand(1);

    IdealArgs gb_args, dim_args, height_args, member_args, intersect_args;
    std::string member_poly, intersect_second;
    add_ideal_args(app.add_subcommand("gb", "reduced Groebner basis, one element per line"),
                   gb_args);
    add_ideal_args(app.add_subcommand("dim", "Krull dimension of the quotient ring"), dim_args);
    add_ideal_args(app.add_subcommand("height", "height of the ideal"), height_args);

    auto* member = app.add_subcommand("member", "normal form; exit 0 iff the polynomial is in the ideal");
    member->add_option("poly", member_poly, "polynomial to test")->required();
    add_ideal_args(member, member_args);

    auto* intersect = app.add_subcommand("intersect", "generators of the intersection of two ideals");
    intersect->add_option("first", intersect_args.file, "first ideal file")->required();
    intersect->add_option("second", intersect_second, "second ideal file")->required();
    intersect->add_option("--field", intersect_args.field, "coefficient field: q or gf:<p>");
    intersect->add_option("--cache", intersect_args.cache_dir, "Groebner basis cache directory");

    std::string minors_file, minors_field;
    std::size_t minors_size = 0;
    auto* minors = app.add_subcommand("minors", "all t-by-t minors, one per line");
    minors->add_option("matrix", minors_file, "matrix file (JSON)")->required();
    minors->add_option("--size", minors_size, "minor size t")->required();
    minors->add_option("--field", minors_field, "coefficient field: q or gf:<p>");

    std::string cp_matrix, cp_sequence, cp_field, cp_cache;
    std::size_t cp_t = 0, cp_budget = 10000;
    bool cp_search = false;
    auto* cp = app.add_subcommand(
        "check-prime", "decide the primality conditions for the t-minor ideal of a labeled matrix");
    cp->add_option("matrix", cp_matrix, "labeled matrix file (JSON, bare symbol entries)")
        ->required();
    cp->add_option("--t", cp_t, "minor size t")->required();
    auto* seq_opt = cp->add_option("--sequence", cp_sequence, "identification sequence file");
    auto* search_opt = cp->add_flag("--search", cp_search, "enumerate presentations for a certificate");
    cp->add_option("--budget", cp_budget, "presentation enumeration cap");
    cp->add_option("--field", cp_field, "coefficient field: q or gf:<p>");
    cp->add_option("--cache", cp_cache, "Groebner basis cache directory");
    seq_opt->excludes(search_opt);

    std::string vp_claims, vp_report, vp_cache;
    bool vp_deterministic = false, vp_no_qq = false;
    std::uint64_t vp_max_pairs = 0, vp_max_steps = 0;
    auto* vp = app.add_subcommand("verify-paper", "run the published-claim verifications");
    vp->add_option("--claims", vp_claims,
                   "comma-separated claim ids (default: all of cor32,prop33,prop34a,prop34cd,prop35,thm36,remark)");
    vp->add_option("--report", vp_report, "write the JSON report to this file");
    vp->add_flag("--deterministic", vp_deterministic, "zero wall times for byte-stable reports");
    vp->add_flag("--no-qq", vp_no_qq, "skip the rational lane of thm36");
    vp->add_option("--cache", vp_cache, "Groebner basis cache directory");
    vp->add_option("--max-pairs", vp_max_pairs, "Groebner pair budget (0 = default)");
    vp->add_option("--max-steps", vp_max_steps, "Groebner step budget (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("gb")) return cmd_gb(gb_args);
        if (app.got_subcommand("dim")) return cmd_dim(dim_args, false);
        if (app.got_subcommand("height")) return cmd_dim(height_args, true);
        if (app.got_subcommand("minors")) return cmd_minors(minors_file, minors_size, minors_field);
        if (app.got_subcommand("member")) return cmd_member(member_poly, member_args);
        if (app.got_subcommand("intersect")) {
            IdealArgs a = intersect_args;
            return cmd_intersect(intersect_args.file, intersect_second, a);
        }
        if (app.got_subcommand("check-prime")) {
            if (cp_sequence.empty() && !cp_search) {
                throw DomainError("check-prime needs --sequence <file> or --search");
            }
            return cmd_check_prime(cp_matrix, cp_t, cp_sequence, cp_budget, cp_field, cp_cache);
        }
        // verify-paper
        VerifyOptions opt;
        opt.deterministic = vp_deterministic;
        opt.run_qq = !vp_no_qq;
        if (!vp_cache.empty()) {
            static std::optional<GbCache> cache;
            cache.emplace(vp_cache);
            opt.cache = &*cache;
        }
        if (vp_max_pairs) opt.budget.max_pairs = opt.qq_budget.max_pairs = vp_max_pairs;
        if (vp_max_steps) opt.budget.max_steps = opt.qq_budget.max_steps = vp_max_steps;
        std::vector<std::string> ids;
        if (!vp_claims.empty()) {
            std::size_t start = 0;
            while (start <= vp_claims.size()) {
                std::size_t comma = vp_claims.find(',', start);
                if (comma == std::string::npos) comma = vp_claims.size();
                if (comma > start) ids.push_back(vp_claims.substr(start, comma - start));
                start = comma + 1;
            }
        }
        return cmd_verify(ids, vp_report, opt);
    } catch (const ResourceExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
