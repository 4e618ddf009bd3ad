#pragma once

/**
 * @file graded_scalar.hpp
 * @brief Graded coefficients: finitely supported maps degree -> Q(k).
 *
 * A GradedScalar represents sum_d f_d(k) * e1^d where e1 is the degree-1
 * generator and the second generator is eliminated via e2 = -k * e1.  Stored
 * terms are nonzero; the zero scalar has empty support.  Multiplication is
 * degree-additive; division is restricted to homogeneous (single-term)
 * divisors, which are exactly the invertible elements used here.
 */

#include <iosfwd>
#include <map>
#include <string>

#include "hilb/rational.hpp"
#include "hilb/rational_function.hpp"

namespace hilb {

class GradedScalar {
public:
    GradedScalar() = default;
    GradedScalar(const Rational& c) : GradedScalar(RationalFunction(c), 0) {}  // NOLINT
    GradedScalar(long c) : GradedScalar(RationalFunction(c), 0) {}             // NOLINT
    GradedScalar(const RationalFunction& f) : GradedScalar(f, 0) {}            // NOLINT
    /// Single term f * e1^degree.
    GradedScalar(const RationalFunction& f, int degree);

    const std::map<int, RationalFunction>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const { return terms_.size() == 1; }
    /// Degree of the unique term; throws std::domain_error otherwise.
    int sole_degree() const;
    const RationalFunction& coeff(int degree) const;

    GradedScalar& operator+=(const GradedScalar& o);
    GradedScalar& operator-=(const GradedScalar& o);
    friend GradedScalar operator+(GradedScalar a, const GradedScalar& b) { return a += b; }
    friend GradedScalar operator-(GradedScalar a, const GradedScalar& b) { return a -= b; }
    friend GradedScalar operator*(const GradedScalar& a, const GradedScalar& b);
    GradedScalar& operator*=(const GradedScalar& o) { return *this = *this * o; }
    /// Divisor must be nonzero and homogeneous; throws std::domain_error otherwise.
    friend GradedScalar operator/(const GradedScalar& a, const GradedScalar& b);
    GradedScalar operator-() const;

    /// Degree-preserving scaling of every term.
    GradedScalar scale(const RationalFunction& f) const;
    GradedScalar scale(const Rational& c) const { return scale(RationalFunction(c)); }

    friend bool operator==(const GradedScalar& a, const GradedScalar& b) {
        return a.terms_ == b.terms_;
    }

    /// Substitutes e1 = x1, e2 = x2 (so k = -x2/x1); requires x1 != 0 and no
    /// pole of any coefficient at that k.
    Rational eval(const Rational& x1, const Rational& x2) const;

    /// e.g. "(k - 1)*e1 + 2*e1^-1"; "0" for zero.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GradedScalar& g);

private:
    std::map<int, RationalFunction> terms_;  // degree -> nonzero coefficient
};

/// 1 (degree 0).
const GradedScalar& gs_one();
/// e1, the degree-1 generator.
const GradedScalar& gs_eps1();
/// e2 = -k * e1.
const GradedScalar& gs_eps2();
/// -e1 - e2 = (k - 1) * e1.
const GradedScalar& gs_kx();
/// e1 * e2 = -k * e1^2.
const GradedScalar& gs_c2x();

}  // namespace hilb
