#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "detideal/errors.hpp"
#include "detideal/field.hpp"
#include "detideal/monomial.hpp"
#include "detideal/order.hpp"
#include "detideal/ring.hpp"

namespace detideal {

// Canonical storage order for term lists.  Every polynomial keeps its terms
// strictly descending under grevlex regardless of the order a computation
// runs in; Groebner routines re-sort working copies under their active order.
inline int canonical_cmp(const Monomial& a, const Monomial& b) {
    static const MonomialOrder kCanon = MonomialOrder::grevlex();
    return kCanon.cmp(a, b);
}

template <class F>
struct Term {
    typename F::Elem coeff;
    Monomial mono;
};

// Sparse exact multivariate polynomial with coefficients in F (GF or QQ).
// Invariants: no zero coefficients; terms strictly descending under grevlex.
template <class F>
class Polynomial {
  public:
    using Coeff = typename F::Elem;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)), fld_(ring_->field()) {}

    Polynomial(RingPtr ring, std::vector<Term<F>> terms) : Polynomial(std::move(ring)) {
        terms_ = std::move(terms);
        canonicalize();
    }

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }

    static Polynomial constant(const RingPtr& ring, long long c) {
        Polynomial p(ring);
        F fld(ring->field());
        Coeff e = fld.from_int(c);
        if (!fld.is_zero(e)) p.terms_.push_back({e, Monomial::one(ring->nvars())});
        return p;
    }

    static Polynomial from_coeff(const RingPtr& ring, Coeff c) {
        Polynomial p(ring);
        if (!F(ring->field()).is_zero(c)) p.terms_.push_back({std::move(c), Monomial::one(ring->nvars())});
        return p;
    }

    static Polynomial variable(const RingPtr& ring, std::size_t i) {
        Polynomial p(ring);
        p.terms_.push_back({F(ring->field()).one(), Monomial::variable(ring->nvars(), i)});
        return p;
    }

    static Polynomial variable(const RingPtr& ring, const std::string& name) {
        return variable(ring, ring->vars().index(name));
    }

    const RingPtr& ring() const { return ring_; }
    const F& field() const { return fld_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool operator==(const Polynomial& o) const {
        if (*ring_ != *o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].mono != o.terms_[i].mono) return false;
            if (!fld_.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Leading term under the given order.  Canonical storage makes the
    // grevlex case a front lookup; other orders scan.
    const Term<F>& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw ZeroPolynomialError("zero polynomial has no leading term");
        if (ord.kind() == OrderKind::GrevLex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        }
        return terms_[best];
    }

    const Monomial& leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).mono; }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(ring_);
        r.terms_ = merge_add(terms_, o.terms_, fld_, false);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_ring(o);
        Polynomial r(ring_);
        r.terms_ = merge_add(terms_, o.terms_, fld_, true);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({fld_.neg(t.coeff), t.mono});
        return r;
    }

    Polynomial scaled(const Coeff& c) const {
        Polynomial r(ring_);
        if (fld_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({fld_.mul(t.coeff, c), t.mono});
        return r;
    }

    // Multiplying by one term preserves descending order, so no re-sort.
    Polynomial mul_term(const Coeff& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (fld_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({fld_.mul(t.coeff, c), t.mono * m});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
        const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
        Polynomial acc(ring_);
        for (const auto& t : small.terms_) {
            acc = acc + big.mul_term(t.coeff, t.mono);
        }
        return acc;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1u;
        }
        return r;
    }

    Polynomial monic(const MonomialOrder& ord) const {
        if (terms_.empty()) throw ZeroPolynomialError("cannot normalize the zero polynomial");
        return scaled(fld_.inv(leading_term(ord).coeff));
    }

    // Replace variable i by the polynomial val (same ring).
    Polynomial substitute(std::size_t var, const Polynomial& val) const {
        check_ring(val);
        if (var >= ring_->nvars()) throw DomainError("substitute: variable index out of range");
        Polynomial acc(ring_);
        std::vector<Polynomial> val_pow{constant(ring_, 1)};
        for (const auto& t : terms_) {
            unsigned e = t.mono.exp(var);
            while (val_pow.size() <= e) val_pow.push_back(val_pow.back() * val);
            Monomial rest = t.mono;
            rest.set(var, 0);
            acc = acc + val_pow[e].mul_term(t.coeff, rest);
        }
        return acc;
    }

    // Transport into new_ring, sending old variable i to new variable
    // new_index[i].  Coefficients carry over unchanged (same field).
    Polynomial map_variables(const RingPtr& new_ring, const std::vector<std::size_t>& new_index) const {
        if (new_index.size() != ring_->nvars()) throw DomainError("map_variables: index map arity mismatch");
        if (new_ring->field() != ring_->field()) throw RingMismatchError("map_variables: field mismatch");
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(new_ring->nvars());
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                if (t.mono.exp(i) == 0) continue;
                std::size_t j = new_index[i];
                if (j >= new_ring->nvars()) throw DomainError("map_variables: target index out of range");
                if (m.exp(j) != 0) throw DomainError("map_variables: two variables map to one target");
                m.set(j, t.mono.exp(i));
            }
            out.push_back({t.coeff, m});
        }
        return Polynomial(new_ring, std::move(out));
    }

    // Indices of variables that occur in some term.
    std::vector<std::size_t> support() const {
        std::vector<bool> seen(ring_->nvars(), false);
        for (const auto& t : terms_) {
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                if (t.mono.exp(i) != 0) seen[i] = true;
            }
        }
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (seen[i]) out.push_back(i);
        }
        return out;
    }

  private:
    void check_ring(const Polynomial& o) const { require_same_ring(ring_, o.ring_); }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term<F>& a, const Term<F>& b) {
            return canonical_cmp(a.mono, b.mono) > 0;
        });
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff = fld_.add(out.back().coeff, t.coeff);
                if (fld_.is_zero(out.back().coeff)) out.pop_back();
            } else if (!fld_.is_zero(t.coeff)) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    static std::vector<Term<F>> merge_add(const std::vector<Term<F>>& a, const std::vector<Term<F>>& b,
                                          const F& fld, bool subtract) {
        std::vector<Term<F>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = canonical_cmp(a[i].mono, b[j].mono);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back({subtract ? fld.neg(b[j].coeff) : b[j].coeff, b[j].mono});
                ++j;
            } else {
                auto s = subtract ? fld.sub(a[i].coeff, b[j].coeff) : fld.add(a[i].coeff, b[j].coeff);
                if (!fld.is_zero(s)) out.push_back({std::move(s), a[i].mono});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back({subtract ? fld.neg(b[j].coeff) : b[j].coeff, b[j].mono});
        return out;
    }

    RingPtr ring_;
    F fld_;
    std::vector<Term<F>> terms_;
};

using PolyGF = Polynomial<GF>;
using PolyQQ = Polynomial<QQ>;

}  // namespace detideal
