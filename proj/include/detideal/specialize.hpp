#pragma once

// Identification sequences on a generic matrix and the machinery that decides
// whether they specialize a determinantal ring to a prime quotient: the stage
// graphs G_0..G_s, the bad-sequence test, the recursive substitution matrices,
// and the three-condition checker with its dimension cross-check.  A labeled
// matrix (repeated symbols mark identified entries) can be expanded into every
// sequence presentation realizing its identifications, so "some presentation
// works" and "all presentations are bad" are both decidable by enumeration.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "detideal/errors.hpp"
#include "detideal/groebner.hpp"
#include "detideal/polymatrix.hpp"
#include "detideal/polynomial.hpp"

namespace detideal {

// 1-based matrix position.  Sequences and reports use these; the 0-based
// indexing of PolyMatrix stays an implementation detail.
struct Position {
    int row = 0;
    int col = 0;
};

inline bool operator==(const Position& a, const Position& b) {
    return a.row == b.row && a.col == b.col;
}
inline bool operator!=(const Position& a, const Position& b) { return !(a == b); }
inline bool operator<(const Position& a, const Position& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

inline std::string to_string(const Position& p) {
    return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

// An ordered list of pairs (alpha, beta) on an m x n shape with minor size t.
// Each pair imposes the equation x_alpha = x_beta on the generic matrix; alpha
// must lie in the first r = t-1 columns.  Repeated alphas are representable
// (the checker reports them as a condition (i) failure) but positions must be
// in range.
class IdentificationSequence {
  public:
    IdentificationSequence(std::size_t m, std::size_t n, std::size_t t,
                           std::vector<std::pair<Position, Position>> pairs)
        : m_(m), n_(n), t_(t), pairs_(std::move(pairs)) {
        if (m_ < n_ || n_ < t_ || t_ < 1) {
            throw DomainError("identification sequence requires m >= n >= t >= 1");
        }
        for (const auto& [alpha, beta] : pairs_) {
            require_in_range(alpha);
            require_in_range(beta);
            if (static_cast<std::size_t>(alpha.col) > r()) {
                throw DomainError("alpha " + detideal::to_string(alpha) +
                                  " lies outside the first " + std::to_string(r()) + " columns");
            }
        }
    }

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t t() const { return t_; }
    std::size_t r() const { return t_ - 1; }
    std::size_t s() const { return pairs_.size(); }
    const std::vector<std::pair<Position, Position>>& pairs() const { return pairs_; }

    bool alphas_distinct() const {
        std::vector<Position> seen;
        for (const auto& pr : pairs_) {
            if (std::find(seen.begin(), seen.end(), pr.first) != seen.end()) return false;
            seen.push_back(pr.first);
        }
        return true;
    }

  private:
    void require_in_range(const Position& p) const {
        if (p.row < 1 || static_cast<std::size_t>(p.row) > m_ || p.col < 1 ||
            static_cast<std::size_t>(p.col) > n_) {
            throw DomainError("position " + detideal::to_string(p) + " out of range for " +
                              std::to_string(m_) + "x" + std::to_string(n_));
        }
    }

    std::size_t m_, n_, t_;
    std::vector<std::pair<Position, Position>> pairs_;
};

// Directed graph on the m*n positions.  The base edges run within each row
// from the first r columns to the last n-r columns; stage j adds the reversed
// identification edges beta_1 -> alpha_1, ..., beta_j -> alpha_j.
class SpecGraph {
  public:
    SpecGraph(std::size_t m, std::size_t n, std::size_t r, std::size_t stage)
        : m_(m), n_(n), r_(r), stage_(stage), adj_(m * n) {
        for (std::size_t a = 0; a < m_; ++a) {
            for (std::size_t b = 0; b < r_; ++b) {
                for (std::size_t l = r_; l < n_; ++l) adj_[a * n_ + b].push_back(a * n_ + l);
            }
        }
    }

    std::size_t vertex_count() const { return m_ * n_; }
    std::size_t stage() const { return stage_; }

    std::size_t vertex_id(const Position& p) const {
        return static_cast<std::size_t>(p.row - 1) * n_ + static_cast<std::size_t>(p.col - 1);
    }
    Position position_of(std::size_t id) const {
        return {static_cast<int>(id / n_) + 1, static_cast<int>(id % n_) + 1};
    }

    void add_edge(const Position& from, const Position& to) {
        adj_[vertex_id(from)].push_back(vertex_id(to));
    }

    bool has_edge(const Position& from, const Position& to) const {
        const auto& out = adj_[vertex_id(from)];
        return std::find(out.begin(), out.end(), vertex_id(to)) != out.end();
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& out : adj_) c += out.size();
        return c;
    }

    // Breadth first search; a path from a vertex to itself is the trivial
    // single-vertex path, so it always exists.
    std::optional<std::vector<Position>> find_path(const Position& from, const Position& to) const {
        std::size_t src = vertex_id(from), dst = vertex_id(to);
        std::vector<std::size_t> pred(vertex_count(), vertex_count());
        std::queue<std::size_t> q;
        pred[src] = src;
        q.push(src);
        while (!q.empty() && pred[dst] == vertex_count()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t w : adj_[v]) {
                if (pred[w] == vertex_count()) {
                    pred[w] = v;
                    q.push(w);
                }
            }
        }
        if (pred[dst] == vertex_count()) return std::nullopt;
        std::vector<Position> path;
        for (std::size_t v = dst;; v = pred[v]) {
            path.push_back(position_of(v));
            if (v == src) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // All-pairs reachability, trivial paths included.
    std::vector<std::vector<bool>> reachability() const {
        std::size_t nv = vertex_count();
        std::vector<std::vector<bool>> reach(nv, std::vector<bool>(nv, false));
        for (std::size_t src = 0; src < nv; ++src) {
            std::queue<std::size_t> q;
            reach[src][src] = true;
            q.push(src);
            while (!q.empty()) {
                std::size_t v = q.front();
                q.pop();
                for (std::size_t w : adj_[v]) {
                    if (!reach[src][w]) {
                        reach[src][w] = true;
                        q.push(w);
                    }
                }
            }
        }
        return reach;
    }

  private:
    std::size_t m_, n_, r_, stage_;
    std::vector<std::vector<std::size_t>> adj_;
};

inline SpecGraph build_graph(const IdentificationSequence& seq, std::size_t stage) {
    if (stage > seq.s()) {
        throw DomainError("graph stage " + std::to_string(stage) + " exceeds sequence length " +
                          std::to_string(seq.s()));
    }
    SpecGraph g(seq.m(), seq.n(), seq.r(), stage);
    for (std::size_t k = 0; k < stage; ++k) {
        g.add_edge(seq.pairs()[k].second, seq.pairs()[k].first);
    }
    return g;
}

struct BadnessResult {
    bool bad = false;
    std::size_t index = 0;        // earliest 1-based j witnessing badness
    std::vector<Position> path;   // directed path alpha_j .. beta_j in G_{j-1}
};

// A sequence is bad when some stage-(j-1) graph carries a directed path from
// alpha_j to beta_j.  A pair with alpha == beta is bad through the trivial
// path: the equation x_alpha = x_alpha adds nothing and its stage only
// corrupts the dimension count.
inline BadnessResult is_bad(const IdentificationSequence& seq) {
    SpecGraph g(seq.m(), seq.n(), seq.r(), 0);
    for (std::size_t j = 1; j <= seq.s(); ++j) {
        const auto& [alpha, beta] = seq.pairs()[j - 1];
        if (auto path = g.find_path(alpha, beta)) return {true, j, *path};
        g.add_edge(beta, alpha);
    }
    return {};
}

// True when the variable with the given index appears in some term of p.
template <typename F>
bool variable_occurs(const Polynomial<F>& p, std::size_t var) {
    for (const auto& t : p.terms()) {
        if (t.mono.exp(var) != 0) return true;
    }
    return false;
}

// The recursive substitution matrices A^(0), ..., A^(s): A^(0) is the rank
// parameterization and step i+1 replaces the variable sitting at entry
// alpha_{i+1} by the polynomial at entry beta_{i+1}.  Distinct alphas keep
// every alpha entry a bare variable throughout; the guard is kept as a
// defensive check on the recursion.
template <typename F>
std::vector<PolyMatrix<F>> substitution_matrices(const IdentificationSequence& seq,
                                                 const FieldConfig& field) {
    if (!seq.alphas_distinct()) {
        throw DomainError("substitution matrices require distinct alphas");
    }
    std::vector<PolyMatrix<F>> out;
    out.push_back(yz_parameterization<F>(seq.m(), seq.n(), seq.t(), field));
    for (const auto& [alpha, beta] : seq.pairs()) {
        const PolyMatrix<F>& cur = out.back();
        std::size_t ar = static_cast<std::size_t>(alpha.row) - 1;
        std::size_t ac = static_cast<std::size_t>(alpha.col) - 1;
        std::string name = indexed_name("y", static_cast<std::size_t>(alpha.row),
                                        static_cast<std::size_t>(alpha.col));
        Polynomial<F> bare = Polynomial<F>::variable(cur.ring(), name);
        if (cur.at(ar, ac) != bare) {
            throw DomainError("entry at alpha " + detideal::to_string(alpha) +
                              " is not the bare variable " + name);
        }
        std::size_t var = cur.ring()->vars().index(name);
        Polynomial<F> replacement =
            cur.at(static_cast<std::size_t>(beta.row) - 1, static_cast<std::size_t>(beta.col) - 1);
        PolyMatrix<F> next(cur.ring(), cur.rows(), cur.cols());
        for (std::size_t i = 0; i < cur.rows(); ++i) {
            for (std::size_t j = 0; j < cur.cols(); ++j) {
                next.set(i, j, cur.at(i, j).substitute(var, replacement));
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

// Maps p into another ring by an index map that may merge variables; merged
// exponents add up.  This is the specialization x_alpha = x_beta realized at
// the polynomial level, unlike the injective map_variables.
template <typename F>
Polynomial<F> specialize_polynomial(const Polynomial<F>& p, const RingPtr& target,
                                    const std::vector<std::size_t>& var_map) {
    if (!(p.ring()->field() == target->field())) {
        throw DomainError("specialize: field mismatch between rings");
    }
    if (var_map.size() != p.ring()->nvars()) {
        throw DomainError("specialize: variable map size mismatch");
    }
    std::vector<Term<F>> terms;
    for (const auto& t : p.terms()) {
        Monomial img = Monomial::one(target->nvars());
        for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
            unsigned e = t.mono.exp(i);
            if (e == 0) continue;
            std::size_t j = var_map[i];
            if (j >= target->nvars()) throw DomainError("specialize: target index out of range");
            unsigned total = img.exp(j) + e;
            if (total > 255) throw CapacityError("specialize: exponent exceeds 255");
            img.set(j, total);
        }
        terms.push_back({t.coeff, img});
    }
    return Polynomial<F>(target, std::move(terms));
}

namespace detail {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        // Smaller id wins so the class representative is the row-major least.
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
    }
    std::vector<std::size_t> parent;
};

}  // namespace detail

// A specialized copy of the generic m x n matrix with one variable per
// identification class, named after the class's row-major least position.
template <typename F>
struct Specialization {
    PolyMatrix<F> matrix;
    std::vector<std::size_t> var_of_position;   // row-major position -> ring variable
};

template <typename F>
Specialization<F> specialize_sequence(const IdentificationSequence& seq,
                                      const FieldConfig& field) {
    std::size_t m = seq.m(), n = seq.n();
    detail::UnionFind uf(m * n);
    SpecGraph shape(m, n, seq.r(), 0);
    for (const auto& [alpha, beta] : seq.pairs()) {
        uf.unite(shape.vertex_id(alpha), shape.vertex_id(beta));
    }
    std::vector<std::size_t> var_of_position(m * n);
    std::vector<std::string> names;
    std::map<std::size_t, std::size_t> rep_to_var;
    for (std::size_t id = 0; id < m * n; ++id) {
        std::size_t rep = uf.find(id);
        auto it = rep_to_var.find(rep);
        if (it == rep_to_var.end()) {
            it = rep_to_var.emplace(rep, names.size()).first;
            names.push_back(indexed_name("x", rep / n + 1, rep % n + 1));
        }
        var_of_position[id] = it->second;
    }
    RingPtr R = make_ring(names, field);
    PolyMatrix<F> X(R, m, n);
    for (std::size_t id = 0; id < m * n; ++id) {
        X.set(id / n, id % n, Polynomial<F>::variable(R, var_of_position[id]));
    }
    return {std::move(X), std::move(var_of_position)};
}

struct ConditionThree {
    bool holds = false;
    int dim_full = 0;          // dim of the specialized minor ideal
    int dim_plus_corner = 0;   // dim after adjoining the r-minors of the first r columns
};

// Condition (iii) as a strict dimension drop: adjoining the corner minors must
// cut the specialized minor locus.  For the equidimensional quotients at hand
// this is positive height of the image ideal.  With r = 0 there is no corner
// ideal to adjoin and the condition holds vacuously.
template <typename F>
ConditionThree check_condition_iii(const IdentificationSequence& seq, const FieldConfig& field,
                                   const MonomialOrder& ord, const GbBudget& budget = GbBudget{},
                                   const GbCache* cache = nullptr) {
    auto spec = specialize_sequence<F>(seq, field);
    auto gens = spec.matrix.minors(seq.t());
    Ideal<F> It(spec.matrix.ring(), gens);
    int d1 = krull_dimension(It, ord, budget, cache).dim;
    if (seq.r() == 0) return {true, d1, d1};
    std::vector<std::size_t> all_rows(seq.m());
    for (std::size_t i = 0; i < seq.m(); ++i) all_rows[i] = i;
    std::vector<std::size_t> corner_cols(seq.r());
    for (std::size_t j = 0; j < seq.r(); ++j) corner_cols[j] = j;
    auto corner = spec.matrix.submatrix(all_rows, corner_cols).minors(seq.r());
    auto combined = gens;
    combined.insert(combined.end(), corner.begin(), corner.end());
    int d2 = krull_dimension(Ideal<F>(spec.matrix.ring(), combined), ord, budget, cache).dim;
    return {d2 < d1, d1, d2};
}

struct ConditionReport {
    bool cond_i = false;
    bool cond_ii = false;
    std::size_t bad_index = 0;          // 1-based failing stage when cond_ii is false
    std::vector<Position> bad_path;
    bool cond_iii = false;
    int dim_full = 0;
    int dim_plus_corner = 0;
    int predicted_dim = 0;              // (m+n-t+1)(t-1) - s
    bool all_hold = false;
    bool dim_consistent = false;        // predicted_dim == dim_full; decisive when all_hold
};

// Evaluates all three hypotheses and reports each outcome, so a failing
// condition never masks the others.  When all hold, the quotient is a
// Cohen-Macaulay domain of the predicted dimension, cross-checked against the
// computed one.
template <typename F>
ConditionReport check_theorem(const IdentificationSequence& seq, const FieldConfig& field,
                              const MonomialOrder& ord = MonomialOrder::grevlex(),
                              const GbBudget& budget = GbBudget{},
                              const GbCache* cache = nullptr) {
    ConditionReport rep;
    rep.cond_i = seq.alphas_distinct();
    BadnessResult bad = is_bad(seq);
    rep.cond_ii = !bad.bad;
    rep.bad_index = bad.index;
    rep.bad_path = bad.path;
    ConditionThree c3 = check_condition_iii<F>(seq, field, ord, budget, cache);
    rep.cond_iii = c3.holds;
    rep.dim_full = c3.dim_full;
    rep.dim_plus_corner = c3.dim_plus_corner;
    rep.predicted_dim = static_cast<int>((seq.m() + seq.n() - seq.t() + 1) * (seq.t() - 1)) -
                        static_cast<int>(seq.s());
    rep.all_hold = rep.cond_i && rep.cond_ii && rep.cond_iii;
    rep.dim_consistent = rep.predicted_dim == rep.dim_full;
    return rep;
}

// A matrix of symbols where repeated symbols mark identified entries.  Labels
// double as variable names for the specialized ring, so they must be valid
// identifiers.
class LabeledMatrix {
  public:
    explicit LabeledMatrix(std::vector<std::vector<std::string>> labels)
        : labels_(std::move(labels)) {
        if (labels_.empty() || labels_[0].empty()) {
            throw DomainError("labeled matrix must be nonempty");
        }
        for (const auto& row : labels_) {
            if (row.size() != labels_[0].size()) {
                throw DomainError("labeled matrix rows must have equal length");
            }
            for (const auto& s : row) {
                if (!is_valid_variable_name(s)) {
                    throw DomainError("invalid label '" + s + "'");
                }
            }
        }
    }

    std::size_t m() const { return labels_.size(); }
    std::size_t n() const { return labels_[0].size(); }
    const std::string& label(std::size_t i, std::size_t j) const { return labels_[i][j]; }

    LabeledMatrix transpose() const {
        std::vector<std::vector<std::string>> t(n(), std::vector<std::string>(m()));
        for (std::size_t i = 0; i < m(); ++i) {
            for (std::size_t j = 0; j < n(); ++j) t[j][i] = labels_[i][j];
        }
        return LabeledMatrix(std::move(t));
    }

    // Positions sharing each label, row-major, keyed in first-occurrence order.
    std::vector<std::pair<std::string, std::vector<Position>>> classes() const {
        std::vector<std::pair<std::string, std::vector<Position>>> out;
        for (std::size_t i = 0; i < m(); ++i) {
            for (std::size_t j = 0; j < n(); ++j) {
                Position p{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
                auto it = std::find_if(out.begin(), out.end(),
                                       [&](const auto& c) { return c.first == labels_[i][j]; });
                if (it == out.end()) out.push_back({labels_[i][j], {p}});
                else it->second.push_back(p);
            }
        }
        return out;
    }

  private:
    std::vector<std::vector<std::string>> labels_;
};

// Specialized matrix whose ring has one variable per label.
template <typename F>
Specialization<F> specialize_labels(const LabeledMatrix& mat, const FieldConfig& field) {
    auto classes = mat.classes();
    std::vector<std::string> names;
    for (const auto& c : classes) names.push_back(c.first);
    RingPtr R = make_ring(names, field);
    std::vector<std::size_t> var_of_position(mat.m() * mat.n());
    PolyMatrix<F> X(R, mat.m(), mat.n());
    for (std::size_t i = 0; i < mat.m(); ++i) {
        for (std::size_t j = 0; j < mat.n(); ++j) {
            std::size_t v = R->vars().index(mat.label(i, j));
            var_of_position[i * mat.n() + j] = v;
            X.set(i, j, Polynomial<F>::variable(R, v));
        }
    }
    return {std::move(X), std::move(var_of_position)};
}

struct PresentationResult {
    std::vector<IdentificationSequence> sequences;
    bool budget_exhausted = false;
    bool infeasible = false;
    std::string reason;
};

namespace detail {

// All labeled trees on c vertices via Prufer decoding, in lexicographic
// sequence order; c = 2 gives the single edge.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> spanning_trees(
    std::size_t c) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    std::vector<std::size_t> prufer(c >= 2 ? c - 2 : 0, 0);
    while (true) {
        std::vector<std::size_t> degree(c, 1);
        for (std::size_t x : prufer) ++degree[x];
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t x : prufer) {
            for (std::size_t v = 0; v < c; ++v) {
                if (degree[v] == 1) {
                    edges.push_back({v, x});
                    degree[v] = 0;
                    --degree[x];
                    break;
                }
            }
        }
        std::vector<std::size_t> last;
        for (std::size_t v = 0; v < c; ++v) {
            if (degree[v] == 1) last.push_back(v);
        }
        edges.push_back({last[0], last[1]});
        out.push_back(std::move(edges));

        std::size_t i = prufer.size();
        while (i > 0 && prufer[i - 1] == c - 1) prufer[--i] = 0;
        if (i == 0) break;
        ++prufer[i - 1];
    }
    return out;
}

// Orientation of a tree with a designated unused root: every edge points from
// its root-far endpoint (the alpha) to its root-near endpoint, which is the
// only way to give the c-1 edges pairwise distinct alphas.
inline std::vector<std::pair<std::size_t, std::size_t>> orient_from_root(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t c,
    std::size_t root) {
    std::vector<std::vector<std::size_t>> adj(c);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::size_t> parent(c, c);
    std::queue<std::size_t> q;
    parent[root] = root;
    q.push(root);
    std::vector<std::pair<std::size_t, std::size_t>> oriented;   // (alpha, beta)
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t w : adj[v]) {
            if (parent[w] == c) {
                parent[w] = v;
                oriented.push_back({w, v});
                q.push(w);
            }
        }
    }
    std::sort(oriented.begin(), oriented.end());
    return oriented;
}

}  // namespace detail

// Every sequence presentation of a labeled matrix's identifications that is
// admissible for the theorem: per class, each spanning tree of the identified
// positions with each feasible root orientation; across classes, every
// interleaving of the resulting pairs.  A class with two or more members
// outside the first r columns admits no orientation at all.
inline PresentationResult presentations(const LabeledMatrix& mat, std::size_t t,
                                        std::size_t budget = 10000) {
    if (mat.m() < mat.n() || mat.n() < t || t < 1) {
        throw DomainError("presentations require m >= n >= t >= 1");
    }
    std::size_t r = t - 1;
    PresentationResult result;

    // Per multi-member class: the list of oriented pair sets.
    std::vector<std::vector<std::vector<std::pair<Position, Position>>>> class_choices;
    for (const auto& [label, members] : mat.classes()) {
        if (members.size() < 2) continue;
        std::size_t c = members.size();
        std::vector<std::size_t> outside;
        for (std::size_t v = 0; v < c; ++v) {
            if (static_cast<std::size_t>(members[v].col) > r) outside.push_back(v);
        }
        if (outside.size() >= 2) {
            result.infeasible = true;
            result.reason = "class '" + label + "' has " + std::to_string(outside.size()) +
                            " members outside the first " + std::to_string(r) + " columns";
            return result;
        }
        std::vector<std::vector<std::pair<Position, Position>>> choices;
        for (const auto& tree : detail::spanning_trees(c)) {
            for (std::size_t root = 0; root < c; ++root) {
                if (outside.size() == 1 && root != outside[0]) continue;
                std::vector<std::pair<Position, Position>> pairs;
                for (const auto& [av, bv] : detail::orient_from_root(tree, c, root)) {
                    pairs.push_back({members[av], members[bv]});
                }
                choices.push_back(std::move(pairs));
            }
        }
        class_choices.push_back(std::move(choices));
    }

    // Cartesian product over classes, then all orderings of the joined pairs.
    std::vector<std::size_t> pick(class_choices.size(), 0);
    while (true) {
        std::vector<std::pair<Position, Position>> joined;
        for (std::size_t k = 0; k < class_choices.size(); ++k) {
            const auto& pairs = class_choices[k][pick[k]];
            joined.insert(joined.end(), pairs.begin(), pairs.end());
        }
        std::vector<std::size_t> perm(joined.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            if (result.sequences.size() >= budget) {
                result.budget_exhausted = true;
                return result;
            }
            std::vector<std::pair<Position, Position>> ordered;
            for (std::size_t i : perm) ordered.push_back(joined[i]);
            result.sequences.emplace_back(mat.m(), mat.n(), t, std::move(ordered));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::size_t k = class_choices.size();
        while (k > 0 && ++pick[k - 1] == class_choices[k - 1].size()) pick[--k] = 0;
        if (k == 0) break;
    }
    return result;
}

}  // namespace detideal
