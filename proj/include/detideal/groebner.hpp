#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "detideal/errors.hpp"
#include "detideal/gb_cache.hpp"
#include "detideal/poly_io.hpp"
#include "detideal/polynomial.hpp"

namespace detideal {

// Finitely generated ideal.  Zero generators are purged and duplicates up to
// a scalar factor collapse, so an ideal may legitimately end up with an empty
// generator list (the zero ideal).
template <class F>
class Ideal {
  public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial<F>> gens = {}) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            require_same_ring(ring_, g.ring());
            if (g.is_zero()) continue;
            Polynomial<F> gm = g.monic(MonomialOrder::grevlex());
            bool dup = false;
            for (const auto& seen : monic_) {
                if (seen == gm) {
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                monic_.push_back(std::move(gm));
                gens_.push_back(std::move(g));
            }
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

  private:
    RingPtr ring_;
    std::vector<Polynomial<F>> gens_;
    std::vector<Polynomial<F>> monic_;
};

// Work limits for a Buchberger run.  Exceeding one raises
// ResourceExhaustedError; a partial basis is never returned.
struct GbBudget {
    std::uint64_t max_pairs = 2'000'000;        // S-pairs popped from the queue
    std::uint64_t max_steps = 400'000'000;      // single-term reduction steps
    std::size_t max_basis = 20'000;             // working basis size
};

struct GbStats {
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t steps = 0;
    std::size_t basis_peak = 0;
    bool from_cache = false;
};

template <class F>
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elements;  // monic, interreduced, ascending by leading monomial
    bool reduced = true;
    GbStats stats;
};

namespace detail {

// Buchberger engine.  Works on term vectors sorted descending under the
// active order; pair bookkeeping follows the Gebauer-Moeller update, which
// realizes the coprime and chain criteria without missed pairs.
template <class F>
class GbEngine {
  public:
    GbEngine(RingPtr ring, MonomialOrder ord, GbBudget budget)
        : ring_(std::move(ring)), fld_(ring_->field()), ord_(ord), budget_(budget),
          pairs_(PairCmp{&ord_}) {}

    std::vector<Polynomial<F>> run(const std::vector<Polynomial<F>>& gens, GbStats& stats) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            add_element(make_monic(to_active(g)));
        }
        while (!pairs_.empty()) {
            PairKey pk = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++stats_.pairs_reduced > budget_.max_pairs) {
                throw ResourceExhaustedError("pair budget exceeded after " +
                                             std::to_string(budget_.max_pairs) + " S-pairs");
            }
            TermVec s = spoly(pk.i, pk.j, pk.lcm);
            TermVec h = reduce_full(std::move(s));
            if (h.empty()) {
                ++stats_.zero_reductions;
            } else {
                add_element(make_monic(std::move(h)));
            }
        }
        auto out = reduced_output();
        stats = stats_;
        return out;
    }

    // Full normal form of one polynomial against a fixed basis (used by the
    // public normal_form; the basis need not come from this engine's run).
    Polynomial<F> normal_form_of(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis) {
        basis_.clear();
        lms_.clear();
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            TermVec t = make_monic(to_active(b));
            lms_.push_back(t.front().mono);
            basis_.push_back(std::move(t));
        }
        return to_canonical(reduce_full(to_active(p)));
    }

  private:
    using TermVec = std::vector<Term<F>>;

    struct PairKey {
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairCmp {
        const MonomialOrder* ord;
        bool operator()(const PairKey& a, const PairKey& b) const {
            int c = ord->cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    TermVec to_active(const Polynomial<F>& p) const {
        TermVec t = p.terms();
        if (ord_.kind() != OrderKind::GrevLex) {
            std::sort(t.begin(), t.end(),
                      [this](const Term<F>& a, const Term<F>& b) { return ord_.cmp(a.mono, b.mono) > 0; });
        }
        return t;
    }

    Polynomial<F> to_canonical(TermVec t) const { return Polynomial<F>(ring_, std::move(t)); }

    TermVec make_monic(TermVec t) const {
        if (t.empty()) throw ZeroPolynomialError("cannot normalize the zero polynomial");
        auto inv = fld_.inv(t.front().coeff);
        for (auto& x : t) x.coeff = fld_.mul(x.coeff, inv);
        return t;
    }

    // f - c * m * g, merged under the active order.  The caller arranges the
    // cancellation of f's head when this implements a reduction step.
    TermVec sub_mul(const TermVec& f, std::size_t from, const typename F::Elem& c, const Monomial& m,
                    const TermVec& g) {
        TermVec out;
        out.reserve(f.size() - from + g.size());
        std::size_t i = from, j = 0;
        Monomial gm = g.empty() ? m : g[0].mono * m;
        while (i < f.size() && j < g.size()) {
            ++stats_.steps;
            int cv = ord_.cmp(f[i].mono, gm);
            if (cv > 0) {
                out.push_back(f[i++]);
            } else if (cv < 0) {
                out.push_back({fld_.neg(fld_.mul(c, g[j].coeff)), gm});
                if (++j < g.size()) gm = g[j].mono * m;
            } else {
                auto s = fld_.sub(f[i].coeff, fld_.mul(c, g[j].coeff));
                if (!fld_.is_zero(s)) out.push_back({std::move(s), f[i].mono});
                ++i;
                if (++j < g.size()) gm = g[j].mono * m;
            }
        }
        for (; i < f.size(); ++i) out.push_back(f[i]);
        for (; j < g.size(); ++j) {
            out.push_back({fld_.neg(fld_.mul(c, g[j].coeff)), g[j].mono * m});
        }
        if (stats_.steps > budget_.max_steps) {
            throw ResourceExhaustedError("reduction step budget exceeded after " +
                                         std::to_string(budget_.max_steps) + " steps");
        }
        return out;
    }

    TermVec spoly(std::size_t i, std::size_t j, const Monomial& lcm) {
        // Both elements are monic: s = (lcm/lm_i) g_i - (lcm/lm_j) g_j.
        TermVec left;
        const TermVec& gi = basis_[i];
        const Monomial mi = lcm / lms_[i];
        left.reserve(gi.size());
        for (const auto& t : gi) left.push_back({t.coeff, t.mono * mi});
        return sub_mul(left, 0, fld_.one(), lcm / lms_[j], basis_[j]);
    }

    TermVec reduce_full(TermVec work) {
        TermVec out;
        std::size_t head = 0;
        while (head < work.size()) {
            const Monomial& m = work[head].mono;
            std::size_t div = basis_.size();
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                ++stats_.steps;
                if (lms_[k].divides(m)) {
                    div = k;
                    break;
                }
            }
            if (div == basis_.size()) {
                out.push_back(work[head++]);
                continue;
            }
            // Divisor is monic, so the multiplier coefficient is the head
            // coefficient itself; the heads cancel in sub_mul.
            TermVec next = sub_mul(work, head, work[head].coeff, m / lms_[div], basis_[div]);
            work = std::move(next);
            head = 0;
        }
        return out;
    }

    // Gebauer-Moeller update: install h as basis element t, prune the pair
    // queue by the chain criterion, and admit only the surviving new pairs.
    void add_element(TermVec h) {
        std::size_t t = basis_.size();
        Monomial lh = h.front().mono;

        // Chain criterion on queued pairs (i,j): drop when lh divides
        // lcm(i,j) strictly finer than both mixed lcms.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if (lh.divides(it->lcm) && lms_[it->i].lcm(lh) != it->lcm && lms_[it->j].lcm(lh) != it->lcm) {
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        std::vector<Monomial> lcms;
        lcms.reserve(t);
        for (std::size_t i = 0; i < t; ++i) lcms.push_back(lms_[i].lcm(lh));

        // First pass keeps candidate (i,t) only if coprime (needed below) or
        // no other pending or kept candidate lcm divides its lcm.
        std::vector<char> kept(t, 0);
        for (std::size_t i = 0; i < t; ++i) {
            bool coprime = lms_[i].coprime_to(lh);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t j = i + 1; j < t && !dominated; ++j) {
                    if (lcms[j].divides(lcms[i])) dominated = true;
                }
                for (std::size_t j = 0; j < i && !dominated; ++j) {
                    if (kept[j] && lcms[j].divides(lcms[i])) dominated = true;
                }
            }
            kept[i] = coprime || !dominated;
        }
        // Second pass drops the coprime survivors (product criterion).
        for (std::size_t i = 0; i < t; ++i) {
            if (kept[i] && !lms_[i].coprime_to(lh)) {
                pairs_.insert({lcms[i], i, t});
            }
        }

        basis_.push_back(std::move(h));
        lms_.push_back(lh);
        stats_.basis_peak = std::max(stats_.basis_peak, basis_.size());
        if (basis_.size() > budget_.max_basis) {
            throw ResourceExhaustedError("basis size budget exceeded at " +
                                         std::to_string(budget_.max_basis) + " elements");
        }
    }

    std::vector<Polynomial<F>> reduced_output() {
        std::size_t n = basis_.size();
        std::vector<char> alive(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n && alive[i]; ++j) {
                if (j == i || !alive[j]) continue;
                if (lms_[j].divides(lms_[i]) && (lms_[j] != lms_[i] || j < i)) alive[i] = 0;
            }
        }
        std::vector<TermVec> keep;
        std::vector<Monomial> keep_lms;
        for (std::size_t i = 0; i < n; ++i) {
            if (alive[i]) {
                keep.push_back(std::move(basis_[i]));
                keep_lms.push_back(lms_[i]);
            }
        }
        basis_ = std::move(keep);
        lms_ = std::move(keep_lms);

        // One full-reduction pass of each element against the other originals
        // yields the unique reduced basis: the leading monomials are pairwise
        // non-dividing, so every tail normal form is already final.
        std::vector<TermVec> reduced(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            TermVec red = reduce_against_others(basis_[i], i);
            if (red.empty() || red.front().mono != lms_[i]) {
                throw Error("interreduction destroyed a leading term (engine invariant)");
            }
            reduced[i] = make_monic(std::move(red));
        }
        basis_ = std::move(reduced);

        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
            return ord_.cmp(lms_[a], lms_[b]) < 0;
        });
        std::vector<Polynomial<F>> out;
        out.reserve(idx.size());
        for (std::size_t k : idx) out.push_back(to_canonical(std::move(basis_[k])));
        return out;
    }

    TermVec reduce_against_others(TermVec work, std::size_t skip) {
        TermVec out;
        std::size_t head = 0;
        while (head < work.size()) {
            const Monomial& m = work[head].mono;
            std::size_t div = basis_.size();
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                if (k == skip) continue;
                ++stats_.steps;
                if (lms_[k].divides(m)) {
                    div = k;
                    break;
                }
            }
            if (div == basis_.size()) {
                out.push_back(work[head++]);
                continue;
            }
            work = sub_mul(work, head, work[head].coeff, m / lms_[div], basis_[div]);
            head = 0;
        }
        return out;
    }

    RingPtr ring_;
    F fld_;
    MonomialOrder ord_;
    GbBudget budget_;
    GbStats stats_;
    std::vector<TermVec> basis_;
    std::vector<Monomial> lms_;
    std::set<PairKey, PairCmp> pairs_;
};

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, const MonomialOrder& ord, const GbBudget& budget = {}) {
    GroebnerBasis<F> gb{I.ring(), ord, {}, true, {}};
    if (I.is_zero()) return gb;
    detail::GbEngine<F> engine(I.ring(), ord, budget);
    gb.elements = engine.run(I.generators(), gb.stats);
    return gb;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& G) {
    require_same_ring(p.ring(), G.ring);
    detail::GbEngine<F> engine(G.ring, G.order, GbBudget{});
    return engine.normal_form_of(p, G.elements);
}

template <class F>
bool ideal_membership(const Polynomial<F>& p, const GroebnerBasis<F>& G) {
    return normal_form(p, G).is_zero();
}

template <class F>
bool ideal_membership(const Polynomial<F>& p, const Ideal<F>& I, const MonomialOrder& ord,
                      const GbBudget& budget = {}) {
    return ideal_membership(p, buchberger(I, ord, budget));
}

// Post-hoc Buchberger criterion: every S-polynomial of basis pairs reduces
// to zero.  Checked directly, without the construction-time pair pruning.
template <class F>
bool groebner_certificate(const GroebnerBasis<F>& G) {
    std::size_t n = G.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& gi = G.elements[i];
            const auto& gj = G.elements[j];
            const Monomial& mi = gi.leading_monomial(G.order);
            const Monomial& mj = gj.leading_monomial(G.order);
            Monomial l = mi.lcm(mj);
            const F& fld = gi.field();
            Polynomial<F> s = gi.mul_term(fld.inv(gi.leading_term(G.order).coeff), l / mi) -
                              gj.mul_term(fld.inv(gj.leading_term(G.order).coeff), l / mj);
            if (!normal_form(s, G).is_zero()) return false;
        }
    }
    return true;
}

inline std::string gb_cache_key(const RingPtr& ring, const MonomialOrder& ord,
                                std::vector<std::string> gen_texts) {
    std::sort(gen_texts.begin(), gen_texts.end());
    std::string key = "detideal gb v1\nfield " + ring->field().to_string() + "\norder " + ord.to_string() +
                      "\nvars ";
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i) key += ",";
        key += ring->vars().name(i);
    }
    key += "\ngens " + std::to_string(gen_texts.size()) + "\n";
    for (const auto& g : gen_texts) key += g + "\n";
    return key;
}

// buchberger with an optional on-disk cache.  The cache key is the sorted
// generator serialization plus field and order, so shuffled generator lists
// share an entry (the reduced basis is unique either way).
template <class F>
GroebnerBasis<F> cached_buchberger(const Ideal<F>& I, const MonomialOrder& ord, const GbBudget& budget = {},
                                   const GbCache* cache = nullptr) {
    if (!cache) return buchberger(I, ord, budget);
    std::vector<std::string> gen_texts;
    gen_texts.reserve(I.generators().size());
    for (const auto& g : I.generators()) gen_texts.push_back(to_string(g));
    std::string key = gb_cache_key(I.ring(), ord, std::move(gen_texts));
    if (auto hit = cache->load(key)) {
        try {
            GroebnerBasis<F> gb{I.ring(), ord, {}, true, {}};
            gb.stats.from_cache = true;
            for (const auto& line : *hit) gb.elements.push_back(parse_poly<F>(I.ring(), line));
            return gb;
        } catch (const ParseError&) {
            // Corrupt entry: fall through and recompute.
        }
    }
    GroebnerBasis<F> gb = buchberger(I, ord, budget);
    std::vector<std::string> elem_texts;
    elem_texts.reserve(gb.elements.size());
    for (const auto& e : gb.elements) elem_texts.push_back(to_string(e));
    cache->store(key, elem_texts);
    return gb;
}

// Elimination-based intersection: adjoin a tag variable w as the LAST ring
// variable, form w*I + (1-w)*J, eliminate w with a block order making w
// dominant, and keep the w-free basis elements.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J, const GbBudget& budget = {},
                            const GbCache* cache = nullptr) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    std::string tag = "w";
    for (int k = 0; R->vars().contains(tag); ++k) tag = "w" + std::to_string(k);
    std::vector<std::string> ext_names = R->vars().names();
    ext_names.push_back(tag);
    RingPtr E = make_ring(std::move(ext_names), R->field());

    std::vector<std::size_t> up(R->nvars());
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = i;
    std::size_t w_index = E->nvars() - 1;
    Polynomial<F> w = Polynomial<F>::variable(E, w_index);
    Polynomial<F> one_minus_w = Polynomial<F>::constant(E, 1) - w;

    std::vector<Polynomial<F>> gens;
    for (const auto& f : I.generators()) gens.push_back(w * f.map_variables(E, up));
    for (const auto& g : J.generators()) gens.push_back(one_minus_w * g.map_variables(E, up));

    MonomialOrder ord = MonomialOrder::block(1, MonomialOrder::lex(), MonomialOrder::grevlex());
    GroebnerBasis<F> gb = cached_buchberger(Ideal<F>(E, std::move(gens)), ord, budget, cache);

    std::vector<std::size_t> down(E->nvars(), 0);
    for (std::size_t i = 0; i + 1 < E->nvars(); ++i) down[i] = i;
    std::vector<Polynomial<F>> kept;
    for (const auto& e : gb.elements) {
        bool has_w = false;
        for (const auto& t : e.terms()) {
            if (t.mono.exp(w_index) != 0) {
                has_w = true;
                break;
            }
        }
        if (!has_w) {
            down[w_index] = 0;  // unused for w-free elements
            kept.push_back(e.map_variables(R, down));
        }
    }
    return Ideal<F>(R, std::move(kept));
}

struct DimensionResult {
    int dim = 0;
    std::vector<std::string> witness;  // maximal independent variable set
    bool unit_ideal = false;
};

namespace detail {

// Minimum hitting set over bitmask supports, branch-and-bound seeded by a
// greedy cover.  Universe indices are bit positions; supports are nonempty.
inline void min_hitting_rec(const std::vector<std::uint32_t>& supports, std::uint32_t chosen,
                            unsigned count, unsigned& best, std::uint32_t& best_mask) {
    if (count >= best) return;
    const std::uint32_t* unhit = nullptr;
    for (const auto& s : supports) {
        if ((s & chosen) == 0) {
            unhit = &s;
            break;
        }
    }
    if (!unhit) {
        best = count;
        best_mask = chosen;
        return;
    }
    for (std::uint32_t rest = *unhit; rest;) {
        std::uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        min_hitting_rec(supports, chosen | bit, count + 1, best, best_mask);
    }
}

inline std::pair<unsigned, std::uint32_t> min_hitting_set(std::vector<std::uint32_t> supports,
                                                          std::size_t universe_bits) {
    if (supports.empty()) return {0, 0};
    // Supersets are redundant: hitting the subset hits them too.
    std::sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::vector<std::uint32_t> pruned;
    for (std::uint32_t s : supports) {
        bool redundant = false;
        for (std::uint32_t t : pruned) {
            if ((t & s) == t) {
                redundant = true;
                break;
            }
        }
        if (!redundant) pruned.push_back(s);
    }
    // Greedy seed: repeatedly take the variable hitting the most remaining
    // supports (ties to the lowest index).
    std::uint32_t greedy = 0;
    {
        std::vector<std::uint32_t> left = pruned;
        while (!left.empty()) {
            unsigned best_hits = 0;
            std::size_t best_var = 0;
            for (std::size_t v = 0; v < universe_bits; ++v) {
                std::uint32_t bit = std::uint32_t{1} << v;
                unsigned hits = 0;
                for (std::uint32_t s : left) {
                    if (s & bit) ++hits;
                }
                if (hits > best_hits) {
                    best_hits = hits;
                    best_var = v;
                }
            }
            std::uint32_t bit = std::uint32_t{1} << best_var;
            greedy |= bit;
            std::vector<std::uint32_t> next;
            for (std::uint32_t s : left) {
                if (!(s & bit)) next.push_back(s);
            }
            left = std::move(next);
        }
    }
    unsigned best = static_cast<unsigned>(__builtin_popcount(greedy));
    std::uint32_t best_mask = greedy;
    min_hitting_rec(pruned, 0, 0, best, best_mask);
    return {best, best_mask};
}

}  // namespace detail

// Krull dimension of ring/ideal from a reduced basis: the maximum size of a
// variable set S such that no basis leading term is supported inside S.
// Unit ideal is flagged and assigned dimension -1 by convention.
template <class F>
DimensionResult krull_dimension(const GroebnerBasis<F>& G) {
    const RingPtr& R = G.ring;
    std::size_t n = R->nvars();
    DimensionResult res;
    if (G.elements.empty()) {
        // Zero ideal: the whole ring survives.
        res.dim = static_cast<int>(n);
        res.witness = R->vars().names();
        return res;
    }
    std::vector<std::uint32_t> supports;
    for (const auto& e : G.elements) {
        const Monomial& m = e.leading_monomial(G.order);
        if (m.is_one()) {
            res.dim = -1;
            res.unit_ideal = true;
            return res;
        }
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp(i) != 0) s |= std::uint32_t{1} << i;
        }
        supports.push_back(s);
    }
    auto [hits, mask] = detail::min_hitting_set(std::move(supports), n);
    res.dim = static_cast<int>(n - hits);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (std::uint32_t{1} << i))) res.witness.push_back(R->vars().name(i));
    }
    return res;
}

template <class F>
DimensionResult krull_dimension(const Ideal<F>& I, const MonomialOrder& ord, const GbBudget& budget = {},
                                const GbCache* cache = nullptr) {
    return krull_dimension(cached_buchberger(I, ord, budget, cache));
}

// height = nvars - dim; with the unit-ideal convention dim = -1 this stays
// total and monotone.
template <class F>
int height(const Ideal<F>& I, const MonomialOrder& ord, const GbBudget& budget = {},
           const GbCache* cache = nullptr) {
    return static_cast<int>(I.ring()->nvars()) - krull_dimension(I, ord, budget, cache).dim;
}

// Dimension of the monomial ideal spanned by the leading terms of A, over
// the full ambient variable set.  For A inside an ideal I this bounds
// dim ring/I from above; for a reduced basis it is exact.
template <class F>
int lt_dimension_bound(const std::vector<Polynomial<F>>& A, const MonomialOrder& ord) {
    if (A.empty()) throw DomainError("lt_dimension_bound needs a nonempty set");
    std::size_t n = A.front().ring()->nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& p : A) {
        const Monomial& m = p.leading_monomial(ord);
        if (m.is_one()) return -1;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp(i) != 0) s |= std::uint32_t{1} << i;
        }
        supports.push_back(s);
    }
    auto [hits, mask] = detail::min_hitting_set(std::move(supports), n);
    (void)mask;
    return static_cast<int>(n - hits);
}

// Same bound computed inside the subring spanned by the variables that occur
// anywhere in A, the convention behind entry-ring height arguments
// (occurring-variable count minus this bound is the height lower bound).
template <class F>
int lt_dimension_bound_restricted(const std::vector<Polynomial<F>>& A, const MonomialOrder& ord) {
    if (A.empty()) throw DomainError("lt_dimension_bound needs a nonempty set");
    std::size_t n = A.front().ring()->nvars();
    std::vector<bool> occurs(n, false);
    for (const auto& p : A) {
        for (std::size_t i : p.support()) occurs[i] = true;
    }
    std::size_t universe = 0;
    for (bool b : occurs) universe += b ? 1 : 0;
    std::vector<std::uint32_t> supports;
    for (const auto& p : A) {
        const Monomial& m = p.leading_monomial(ord);
        if (m.is_one()) return -1;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp(i) != 0) s |= std::uint32_t{1} << i;
        }
        supports.push_back(s);
    }
    auto [hits, mask] = detail::min_hitting_set(std::move(supports), n);
    (void)mask;
    return static_cast<int>(universe - hits);
}

// Number of distinct variables occurring in A (the restricted bound's
// ambient size).
template <class F>
std::size_t occurring_variable_count(const std::vector<Polynomial<F>>& A) {
    if (A.empty()) return 0;
    std::size_t n = A.front().ring()->nvars();
    std::vector<bool> occurs(n, false);
    for (const auto& p : A) {
        for (std::size_t i : p.support()) occurs[i] = true;
    }
    std::size_t c = 0;
    for (bool b : occurs) c += b ? 1 : 0;
    return c;
}

}  // namespace detideal
