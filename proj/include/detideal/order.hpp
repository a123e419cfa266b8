#pragma once

#include <memory>
#include <string>

#include "detideal/errors.hpp"
#include "detideal/monomial.hpp"

namespace detideal {

enum class OrderKind { Lex, GrevLex, Block };

// Monomial order on a ring whose variables are indexed 0..n-1, with index 0
// the greatest variable.  Block orders eliminate the LAST elim_count
// variables: those form the dominant block (compared first, under the outer
// order restricted to them), so "keep the elements whose terms avoid the
// block" is the elimination step for an ideal intersection.
class MonomialOrder {
  public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }

    static MonomialOrder block(std::size_t elim_count, const MonomialOrder& outer,
                               const MonomialOrder& inner) {
        if (elim_count == 0) throw DomainError("block order needs elim_count >= 1");
        if (outer.kind_ == OrderKind::Block || inner.kind_ == OrderKind::Block) {
            throw DomainError("nested block orders are not supported");
        }
        MonomialOrder o(OrderKind::Block);
        o.elim_count_ = elim_count;
        o.outer_kind_ = outer.kind_;
        o.inner_kind_ = inner.kind_;
        return o;
    }

    OrderKind kind() const { return kind_; }
    std::size_t elim_count() const { return elim_count_; }

    // Three-way compare: >0 iff a > b in this order.
    int cmp(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars()) throw RingMismatchError("comparing monomials from different rings");
        switch (kind_) {
            case OrderKind::Lex:
                return cmp_lex(a, b, 0, a.nvars());
            case OrderKind::GrevLex:
                return cmp_grevlex(a, b, 0, a.nvars());
            case OrderKind::Block: {
                std::size_t n = a.nvars();
                if (elim_count_ > n) throw DomainError("block elim_count exceeds variable count");
                std::size_t split = n - elim_count_;
                int c = cmp_simple(outer_kind_, a, b, split, n);
                if (c != 0) return c;
                if (split == 0) return 0;
                return cmp_simple(inner_kind_, a, b, 0, split);
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ != OrderKind::Block) return true;
        return elim_count_ == o.elim_count_ && outer_kind_ == o.outer_kind_ && inner_kind_ == o.inner_kind_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string to_string() const {
        switch (kind_) {
            case OrderKind::Lex:
                return "lex";
            case OrderKind::GrevLex:
                return "grevlex";
            case OrderKind::Block:
                return "block:" + std::to_string(elim_count_) + ":" + kind_name(outer_kind_) + ":" +
                       kind_name(inner_kind_);
        }
        return "?";
    }

  private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static std::string kind_name(OrderKind k) { return k == OrderKind::Lex ? "lex" : "grevlex"; }

    // Compare on the variable range [lo, hi) only.
    static int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
        }
        return 0;
    }

    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        unsigned da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exp(i);
            db += b.exp(i);
        }
        if (da != db) return da > db ? 1 : -1;
        // Equal degree: scan from the least variable; the first difference
        // found decides, with the SMALLER exponent there winning.
        for (std::size_t i = hi; i-- > lo;) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
        }
        return 0;
    }

    static int cmp_simple(OrderKind k, const Monomial& a, const Monomial& b, std::size_t lo,
                          std::size_t hi) {
        return k == OrderKind::Lex ? cmp_lex(a, b, lo, hi) : cmp_grevlex(a, b, lo, hi);
    }

    OrderKind kind_;
    std::size_t elim_count_ = 0;
    OrderKind outer_kind_ = OrderKind::GrevLex;
    OrderKind inner_kind_ = OrderKind::GrevLex;
};

}  // namespace detideal
