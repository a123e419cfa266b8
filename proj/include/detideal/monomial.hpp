#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "detideal/errors.hpp"
#include "detideal/variables.hpp"

namespace detideal {

// Power product in up to kMaxVars variables.  Exponents are uint8, which is
// far beyond anything the determinantal computations here produce; arithmetic
// checks for overflow anyway so a bad input fails loudly instead of wrapping.
class Monomial {
  public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : nvars_(nvars) {
        if (nvars == 0 || nvars > kMaxVars) throw CapacityError("monomial arity out of range");
        exps_.fill(0);
    }

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint8_t e = 1) {
        Monomial m(nvars);
        m.set(i, e);
        return m;
    }

    std::size_t nvars() const { return nvars_; }
    std::uint8_t exp(std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, std::uint8_t e) {
        if (i >= nvars_) throw DomainError("variable index out of range");
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = e;
    }

    Monomial operator*(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = unsigned(exps_[i]) + unsigned(o.exps_[i]);
            if (e > 255) throw CapacityError("monomial exponent overflow");
            r.exps_[i] = static_cast<std::uint8_t>(e);
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] > o.exps_[i]) return false;
        }
        return true;
    }

    // Exact quotient o / this is the caller's mental model: here, this / o.
    Monomial operator/(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (o.exps_[i] > exps_[i]) throw DomainError("monomial quotient is not a monomial");
            r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
            deg += r.exps_[i];
        }
        r.degree_ = deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            r.exps_[i] = std::max(exps_[i], o.exps_[i]);
            deg += r.exps_[i];
        }
        r.degree_ = deg;
        return r;
    }

    Monomial gcd(const Monomial& o) const {
        check_arity(o);
        Monomial r(nvars_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            r.exps_[i] = std::min(exps_[i], o.exps_[i]);
            deg += r.exps_[i];
        }
        r.degree_ = deg;
        return r;
    }

    bool coprime_to(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] != 0 && o.exps_[i] != 0) return false;
        }
        return true;
    }

    bool operator==(const Monomial& o) const { return nvars_ == o.nvars_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = nvars_;
        for (std::size_t i = 0; i < nvars_; ++i) {
            h = h * 1099511628211ULL + exps_[i];
        }
        return h;
    }

    std::string to_string(const VariableSet& vars) const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars.name(i);
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

  private:
    void check_arity(const Monomial& o) const {
        if (nvars_ != o.nvars_) throw RingMismatchError("monomials from different rings");
    }

    std::array<std::uint8_t, kMaxVars> exps_{};
    std::size_t nvars_ = 0;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace detideal
