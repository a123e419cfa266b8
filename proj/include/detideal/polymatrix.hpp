#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "detideal/errors.hpp"
#include "detideal/polynomial.hpp"

namespace detideal {

// All size-t subsets of {0..n-1} as increasing index vectors, in
// lexicographic order.  Drives the deterministic minor enumeration.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (t > n) return out;
    std::vector<std::size_t> cur(t);
    for (std::size_t i = 0; i < t; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // Advance the rightmost index that can still move.
        std::size_t i = t;
        while (i-- > 0) {
            if (cur[i] + 1 <= n - (t - i)) {
                ++cur[i];
                for (std::size_t j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (t == 0) return out;
    }
}

template <class F>
class PolyMatrix {
  public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols) {
        if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
        entries_.assign(rows * cols, Polynomial<F>::zero(ring_));
    }

    static PolyMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<Polynomial<F>>>& rows) {
        if (rows.empty() || rows[0].empty()) throw DomainError("matrix dimensions must be positive");
        PolyMatrix M(ring, rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != M.cols_) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < M.cols_; ++j) M.set(i, j, rows[i][j]);
        }
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    const Polynomial<F>& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }

    void set(std::size_t i, std::size_t j, Polynomial<F> p) {
        check_index(i, j);
        require_same_ring(ring_, p.ring());
        entries_[i * cols_ + j] = std::move(p);
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix transpose() const {
        PolyMatrix M(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) M.set(j, i, at(i, j));
        }
        return M;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set) const {
        for (std::size_t k = 0; k < row_set.size(); ++k) {
            if (row_set[k] >= rows_ || (k > 0 && row_set[k] <= row_set[k - 1])) {
                throw DomainError("row subset must be strictly increasing and in range");
            }
        }
        for (std::size_t k = 0; k < col_set.size(); ++k) {
            if (col_set[k] >= cols_ || (k > 0 && col_set[k] <= col_set[k - 1])) {
                throw DomainError("column subset must be strictly increasing and in range");
            }
        }
        PolyMatrix M(ring_, row_set.size(), col_set.size());
        for (std::size_t i = 0; i < row_set.size(); ++i) {
            for (std::size_t j = 0; j < col_set.size(); ++j) M.set(i, j, at(row_set[i], col_set[j]));
        }
        return M;
    }

    // Memoized Laplace expansion over column subsets: table[S] is the
    // determinant of the submatrix on rows 0..|S|-1 and the columns in S,
    // filled in increasing subset order and expanded along its last row.
    Polynomial<F> determinant() const {
        if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
        if (cols_ > 12) throw CapacityError("determinant limited to 12x12");
        std::size_t n = cols_;
        std::vector<Polynomial<F>> table(std::size_t{1} << n, Polynomial<F>::zero(ring_));
        table[0] = Polynomial<F>::constant(ring_, 1);
        for (std::size_t mask = 1; mask < table.size(); ++mask) {
            unsigned k = static_cast<unsigned>(__builtin_popcountll(mask));
            Polynomial<F> acc = Polynomial<F>::zero(ring_);
            unsigned pos = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (!(mask & (std::size_t{1} << c))) continue;
                const Polynomial<F>& e = at(k - 1, c);
                if (!e.is_zero()) {
                    Polynomial<F> contrib = e * table[mask ^ (std::size_t{1} << c)];
                    bool negate = ((k - 1) + pos) % 2 != 0;
                    acc = negate ? acc - contrib : acc + contrib;
                }
                ++pos;
            }
            table[mask] = std::move(acc);
        }
        return table.back();
    }

    // All t-by-t minors, in lexicographic order of (row_set, col_set).
    std::vector<Polynomial<F>> minors(std::size_t t) const {
        if (t == 0 || t > rows_ || t > cols_) throw DomainError("minor size out of range");
        std::vector<Polynomial<F>> out;
        auto row_sets = combinations(rows_, t);
        auto col_sets = combinations(cols_, t);
        out.reserve(row_sets.size() * col_sets.size());
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                out.push_back(submatrix(rs, cs).determinant());
            }
        }
        return out;
    }

  private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
    }

    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial<F>> entries_;
};

inline std::string indexed_name(const std::string& stem, std::size_t i, std::size_t j) {
    // Single-digit indices concatenate ("x11"); larger ones get a separator
    // so "x111" stays unambiguous.
    if (i <= 9 && j <= 9) return stem + std::to_string(i) + std::to_string(j);
    return stem + std::to_string(i) + "_" + std::to_string(j);
}

// Generic m-by-n matrix of fresh variables x_{ij} in its own ring.
template <class F>
PolyMatrix<F> generic_matrix(std::size_t m, std::size_t n, const FieldConfig& field) {
    if (m == 0 || n == 0) throw DomainError("matrix dimensions must be positive");
    std::vector<std::string> names;
    names.reserve(m * n);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) names.push_back(indexed_name("x", i, j));
    }
    RingPtr ring = make_ring(std::move(names), field);
    PolyMatrix<F> M(ring, m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M.set(i, j, Polynomial<F>::variable(ring, i * n + j));
    }
    return M;
}

// The ring R = K[a1..a5, b1..b5] with precedence a1 > ... > a5 > b1 > ... > b5.
inline std::vector<std::string> hankel_ring_names() {
    return {"a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"};
}

template <class F>
struct HankelTriple {
    PolyMatrix<F> M5, M4, M3;
};

// The three catalecticant matrices M5 (2x5), M4 (4x4), M3 (6x3) built from
// the a/b Hankel rows, all over one shared ring R.
template <class F>
HankelTriple<F> hankel_matrices(const FieldConfig& field) {
    RingPtr ring = make_ring(hankel_ring_names(), field);
    auto var = [&](const std::string& n) { return Polynomial<F>::variable(ring, n); };
    auto a = [&](std::size_t i) { return var("a" + std::to_string(i)); };
    auto b = [&](std::size_t i) { return var("b" + std::to_string(i)); };

    PolyMatrix<F> M5(ring, 2, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        M5.set(0, j, a(j + 1));
        M5.set(1, j, b(j + 1));
    }

    PolyMatrix<F> M4(ring, 4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        M4.set(0, j, a(j + 1));
        M4.set(1, j, a(j + 2));
        M4.set(2, j, b(j + 1));
        M4.set(3, j, b(j + 2));
    }

    PolyMatrix<F> M3(ring, 6, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        M3.set(0, j, a(j + 1));
        M3.set(1, j, a(j + 2));
        M3.set(2, j, a(j + 3));
        M3.set(3, j, b(j + 1));
        M3.set(4, j, b(j + 2));
        M3.set(5, j, b(j + 3));
    }

    return {std::move(M5), std::move(M4), std::move(M3)};
}

// Rank-(t-1) witness: the m-by-n product Y * [I_r | z] with Y an m-by-r
// matrix of fresh y variables and z an r-by-(n-r) matrix of fresh z
// variables, r = t-1.  Every t-by-t minor of the product vanishes.
template <class F>
PolyMatrix<F> yz_parameterization(std::size_t m, std::size_t n, std::size_t t, const FieldConfig& field) {
    if (t < 1 || n < t || m < n) throw DomainError("need m >= n >= t >= 1");
    std::size_t r = t - 1;
    if (r == 0) {
        // Empty Y and Z: the product is the zero matrix.  A placeholder
        // variable keeps the ring non-degenerate.
        RingPtr ring = make_ring({"y11"}, field);
        return PolyMatrix<F>(ring, m, n);
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= r; ++j) names.push_back(indexed_name("y", i, j));
    }
    for (std::size_t i = 1; i <= r; ++i) {
        for (std::size_t j = 1; j <= n - r; ++j) names.push_back(indexed_name("z", i, j));
    }
    RingPtr ring = make_ring(std::move(names), field);
    auto y = [&](std::size_t i, std::size_t j) {
        return Polynomial<F>::variable(ring, (i - 1) * r + (j - 1));
    };
    auto z = [&](std::size_t i, std::size_t j) {
        return Polynomial<F>::variable(ring, m * r + (i - 1) * (n - r) + (j - 1));
    };
    PolyMatrix<F> M(ring, m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        // First r columns of [I_r | z] pick out Y's columns directly.
        for (std::size_t j = 1; j <= r; ++j) M.set(i - 1, j - 1, y(i, j));
        for (std::size_t j = r + 1; j <= n; ++j) {
            Polynomial<F> acc = Polynomial<F>::zero(ring);
            for (std::size_t k = 1; k <= r; ++k) acc = acc + y(i, k) * z(k, j - r);
            M.set(i - 1, j - 1, acc);
        }
    }
    return M;
}

// Variable substitution induced by a name bijection; names absent from the
// map are fixed.  The induced total map must be injective.
template <class F>
Polynomial<F> apply_variable_permutation(const Polynomial<F>& p,
                                         const std::map<std::string, std::string>& perm) {
    const RingPtr& ring = p.ring();
    const VariableSet& vars = ring->vars();
    for (const auto& [from, to] : perm) {
        if (!vars.contains(from)) throw DomainError("permutation source \"" + from + "\" not in ring");
        if (!vars.contains(to)) throw DomainError("permutation target \"" + to + "\" not in ring");
    }
    std::vector<std::size_t> new_index(vars.size());
    std::vector<bool> hit(vars.size(), false);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = perm.find(vars.name(i));
        std::size_t j = it == perm.end() ? i : vars.index(it->second);
        if (hit[j]) throw DomainError("variable map is not a bijection");
        hit[j] = true;
        new_index[i] = j;
    }
    return p.map_variables(ring, new_index);
}

}  // namespace detideal
