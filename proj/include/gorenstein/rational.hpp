#pragma once

/*
 * Exact rationals on top of GMP.
 *
 * Values are always in lowest terms with a positive denominator, and zero is
 * stored as 0/1, so structural equality is value equality and hashing is
 * well defined.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gorenstein {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of integers-as-rationals
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q);

    /// Parses "a/b", "a" or "-a/b". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigInt floor() const;
    /// The unique element of [0,1) congruent to this value modulo 1.
    Rational frac() const;

    /// Lowest-terms text: "0", "3", "1/2", "-5/3".
    std::string to_string() const;

    std::size_t hash() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return r.hash(); }
};

/// Converts a BigInt known to fit into int64; throws std::overflow_error otherwise.
std::int64_t to_int64(const BigInt& z);

}  // namespace gorenstein
