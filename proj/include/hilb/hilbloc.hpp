#pragma once

/**
 * @file hilbloc.hpp
 * @brief Torus characters and Euler classes at monomial-ideal fixed points.
 *
 * Weights live in the character lattice of the two-torus: the pair (a, b)
 * stands for t1^a t2^b, and its Euler factor is a*e1 + b*e2 = (a - b*k)*e1.
 * The fixed-point basis [I_lambda] maps to euler_nonpos(lambda) * P_lambda
 * in the monomial basis with GradedScalar coefficients.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb/graded_scalar.hpp"
#include "hilb/partition.hpp"
#include "hilb/report.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

/// Raised when an Euler class of a character with a trivial weight is
/// requested; such classes vanish and cannot be inverted.
struct ZeroWeightError : std::domain_error {
    explicit ZeroWeightError(const std::string& what) : std::domain_error(what) {}
};

class LaurentChar {
public:
    LaurentChar() = default;

    /// Adds mult copies of t1^a t2^b; mult must be positive.
    void add(int a, int b, long mult = 1);

    const std::map<std::pair<int, int>, long>& weights() const { return weights_; }
    /// Total dimension (sum of multiplicities).
    long dim() const;

    friend bool operator==(const LaurentChar&, const LaurentChar&) = default;

    /// e.g. "t1 + 2*t2 + t1*t2^-1"; "0" when empty.
    std::string str() const;

private:
    std::map<std::pair<int, int>, long> weights_;  // (a, b) -> multiplicity > 0
};

/// Character of the tangent space at I_lambda:
/// sum_s (t1^{l+1} t2^{-a} + t1^{-l} t2^{a+1}).
LaurentChar tangent_char(const Partition& la);

/// Product of Euler factors (a - b*k)^mult * e1^dim; throws ZeroWeightError
/// when the trivial weight (0,0) occurs.
GradedScalar euler_class(const LaurentChar& chi);

/// Euler class of the nonpositive tangent part: prod_s ((l+1)*e1 - a*e2)
/// = e1^n * prod_s (l+1 + a*k).
GradedScalar euler_nonpos(const Partition& la);

/// Euler class of the positive part, euler_class / euler_nonpos.
GradedScalar euler_pos(const Partition& la);

/// [I_lambda] -> euler_nonpos(lambda) * P_lambda, extended linearly over a
/// fixed-point-basis vector.  All terms must share one grade.
SymFuncG fixed_to_monomial(const SymFuncG& v);

/// Inverse of fixed_to_monomial by back-substitution through the dominance
/// triangle; input monomial-basis, single grade.
SymFuncG monomial_to_fixed(const SymFuncG& f);

/// <v, w> = (-1)^n sum_lambda v_lambda w_lambda e(T_lambda) on fixed-point
/// vectors of grade n.
GradedScalar localized_pairing(const SymFuncG& v, const SymFuncG& w);

/// Eigenvalue of cup product with c_1 on [I_lambda]:
/// -(n(lambda) e1 + n(lambda') e2) = (n(lambda')k - n(lambda)) * e1.
GradedScalar c1_eigenvalue(const Partition& la);

/// Character of the tangent space to the nested Hilbert scheme at a pair
/// I_lambda c I_mu with lambda covering mu:
/// t1 + t2 + sum_{s in mu} (t1^{-l_lam(s)} t2^{a_mu(s)+1} + t1^{l_mu(s)+1} t2^{-a_lam(s)}).
LaurentChar nested_tangent_char(const Partition& mu, const Partition& lam);

/// Verifies e(T_nested) = e2 * e(T^{>0}_mu) * e(T^{<=0}_lam) *
/// prod_{s in R} b_mu(s)/b_lam(s) over all covers up to size maxn.
Report nested_euler_identity_check(int maxn);

/// Verifies that every lifted m_lambda expands in the fixed basis with
/// support dominated by lambda, for all degrees <= maxn.
Report triangularity_check(int maxn);

}  // namespace hilb
