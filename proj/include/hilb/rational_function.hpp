#pragma once

/**
 * @file rational_function.hpp
 * @brief Elements of Q(k): quotients of polynomials in canonical form.
 *
 * Canonical form: gcd(num, den) == 1 and den is monic, so two equal values
 * compare equal structurally.  Zero is 0/1.  Division by the zero function
 * throws std::domain_error.
 */

#include <iosfwd>
#include <string>

#include "hilb/poly.hpp"
#include "hilb/rational.hpp"

namespace hilb {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT: implicit
    RationalFunction(long c) : num_(Rational(c)), den_(1) {}   // NOLINT: implicit
    RationalFunction(const Poly& p) : num_(p), den_(1) {}      // NOLINT: implicit
    RationalFunction(Poly num, Poly den);

    /// The function k itself.
    static RationalFunction k();

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Evaluates at k = x; throws std::domain_error when the denominator vanishes.
    Rational eval(const Rational& x) const;

    /// "num" when den == 1, otherwise "num/den" with parentheses as needed.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    void reduce();

    Poly num_;
    Poly den_;  // monic, coprime to num_, never zero
};

}  // namespace hilb
