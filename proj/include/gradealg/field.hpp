#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace gradealg {

/// The rational numbers, backed by GMP. Values are kept canonical
/// (lowest terms, positive denominator) after every operation.
class Rationals {
public:
    using value_type = mpq_class;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long v) const { return value_type(v); }

    /// Decimal integer literal of any length.
    value_type from_literal(std::string_view digits) const {
        mpz_class z;
        if (z.set_str(std::string(digits), 10) != 0)
            throw ParseError("bad integer literal '" + std::string(digits) + "'");
        return value_type(z);
    }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw InputError("division by zero");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool is_negative(const value_type& a) const { return sgn(a) < 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const Rationals&) const = default;
};

/// GF(p) for a prime p < 2^31. Residues live in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw InputError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    }

    std::uint32_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_literal(std::string_view digits) const {
        mpz_class z;
        if (z.set_str(std::string(digits), 10) != 0)
            throw ParseError("bad integer literal '" + std::string(digits) + "'");
        mpz_class r = z % p_;
        return static_cast<value_type>(r.get_ui());
    }

    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw InputError("division by zero in GF(" + std::to_string(p_) + ")");
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return static_cast<value_type>(t < 0 ? t + p_ : t);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    bool is_negative(value_type) const { return false; }
    bool equal(value_type a, value_type b) const { return a == b; }

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField&) const = default;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace gradealg
