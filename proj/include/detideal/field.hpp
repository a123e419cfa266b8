#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "detideal/errors.hpp"

namespace detideal {

enum class FieldKind { Rationals, PrimeField };

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Runtime description of the coefficient field.  The arithmetic backends
// (GF, QQ below) are chosen from this at API boundaries.
struct FieldConfig {
    FieldKind kind = FieldKind::PrimeField;
    std::int64_t p = 32003;

    static FieldConfig rationals() { return {FieldKind::Rationals, 0}; }

    static FieldConfig prime(std::int64_t p) {
        if (p <= 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
            throw DomainError("PrimeField modulus must be a prime > 2, got " + std::to_string(p));
        }
        // mul() relies on products fitting in int64.
        if (p >= (std::int64_t{1} << 31)) {
            throw DomainError("PrimeField modulus must be < 2^31");
        }
        return {FieldKind::PrimeField, p};
    }

    bool operator==(const FieldConfig& o) const {
        return kind == o.kind && (kind == FieldKind::Rationals || p == o.p);
    }
    bool operator!=(const FieldConfig& o) const { return !(*this == o); }

    std::string to_string() const {
        return kind == FieldKind::Rationals ? "q" : "gf:" + std::to_string(p);
    }

    // Accepts the External Interfaces spelling: "q" or "gf:<p>".
    static FieldConfig parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("gf:", 0) == 0) {
            try {
                return prime(std::stoll(s.substr(3)));
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        throw DomainError("unrecognized field \"" + s + "\" (expected \"q\" or \"gf:<p>\")");
    }
};

// Arithmetic over GF(p), elements stored normalized in [0, p).
struct GF {
    using Elem = std::int64_t;
    std::int64_t p;

    explicit GF(const FieldConfig& cfg) : p(cfg.p) {
        if (cfg.kind != FieldKind::PrimeField) throw DomainError("GF backend needs a PrimeField config");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem from_int(long long v) const {
        Elem r = static_cast<Elem>(v % p);
        return r < 0 ? r + p : r;
    }
    Elem from_fraction(long long num, long long den) const { return mul(from_int(num), inv(from_int(den))); }

    // Reduces a decimal digit string of any length mod p.
    Elem from_decimal_string(const std::string& digits) const {
        Elem r = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw DomainError("bad digit in integer literal");
            r = (r * 10 + (c - '0')) % p;
        }
        return r;
    }

    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p ? r - p : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p : r;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }

    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero in GF(p)");
        // Extended Euclid; p prime guarantees invertibility.
        Elem t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            Elem q = r / new_r;
            Elem tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return t < 0 ? t + p : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // Symmetric representative: small negatives print as "-c" rather than "p-c",
    // which keeps serialized polynomials readable and round-trippable.
    std::string to_string(Elem a) const {
        if (a > p / 2) return "-" + std::to_string(p - a);
        return std::to_string(a);
    }
};

// Exact rational arithmetic on top of GMP.
struct QQ {
    using Elem = mpq_class;

    explicit QQ(const FieldConfig& cfg) {
        if (cfg.kind != FieldKind::Rationals) throw DomainError("QQ backend needs a Rationals config");
    }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }

    Elem from_int(long long v) const {
        Elem e;
        e = static_cast<signed long>(v);
        return e;
    }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw DomainError("zero denominator");
        Elem e(static_cast<signed long>(num), static_cast<unsigned long>(den));
        e.canonicalize();
        return e;
    }

    Elem from_decimal_string(const std::string& digits) const {
        for (char c : digits) {
            if (c < '0' || c > '9') throw DomainError("bad digit in integer literal");
        }
        return Elem(mpz_class(digits, 10));
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw DomainError("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw DomainError("division by zero in Q");
        return a / b;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
};

}  // namespace detideal
