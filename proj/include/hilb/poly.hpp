#pragma once

/**
 * @file poly.hpp
 * @brief Univariate polynomials in k over the rationals.
 *
 * Dense coefficient vector, index = power of k, no trailing zero coefficients
 * (the zero polynomial is the empty vector, degree() == -1).  All arithmetic
 * is exact; gcd() returns the monic generator so it is a canonical form.
 */

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constant polynomial, implicit by design
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    /// The monomial k^1.
    static Poly k();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of k^i (zero beyond the stored range).
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const;
    Poly operator*(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws std::domain_error when b is zero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    /// Exact division; throws std::domain_error when the remainder is nonzero.
    friend Poly operator/(const Poly& a, const Poly& b);

    /// Monic greatest common divisor; gcd(0, 0) == 0.
    static Poly gcd(Poly a, Poly b);

    /// Divides by the leading coefficient; zero stays zero.
    Poly monic() const;

    Rational eval(const Rational& x) const;

    /// Human-readable form, e.g. "2k^2 - k + 1" ("0" for zero).
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();

    std::vector<Rational> c_;  // c_[i] multiplies k^i; invariant: back() != 0
};

}  // namespace hilb
