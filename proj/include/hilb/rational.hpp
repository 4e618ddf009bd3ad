#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers with a canonical representation.
 *
 * Key design decisions:
 *   - Backed by GMP (mpq_class), so numerators and denominators never overflow.
 *   - Always canonical: gcd(num, den) == 1, den > 0, zero is 0/1.  Every
 *     constructor and operator re-canonicalizes, so equality is structural.
 *   - Division by zero throws std::domain_error instead of being UB.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace hilb {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    /// Parses "p" or "p/q" in base 10.  Throws std::invalid_argument on junk.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" when den == 1, otherwise "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;  // canonical: gcd == 1, den > 0 (GMP invariant after canonicalize)
};

}  // namespace hilb
