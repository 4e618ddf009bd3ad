#pragma once

/**
 * @file fock.hpp
 * @brief The Fock space model: colored Heisenberg modes acting on power sums.
 *
 * Vectors are power-sum-basis SymFuncs with GradedScalar coefficients.  The
 * concrete model of the mode P_m(alpha), m != 0, with color alpha:
 *
 *   m < 0:  (alpha / e2) * (multiplication by p_{-m})      (creation)
 *   m > 0:  -(alpha / e1) * m * d/dp_m                     (annihilation)
 *
 * so that [P_i(a), P_j(b)] = i delta_{i+j,0} <a,b> id with
 * <a,b> = -a*b/(e1*e2), and p_lambda corresponds to P_{e2}[-lambda] applied
 * to the vacuum.  P_0 acts as zero.
 *
 * Operators are finite sums of scaled mode compositions, optionally extended
 * by a per-degree generator so families like the Virasoro operators truncate
 * themselves on each graded component.  Operator equality is decided by
 * action on the full power-sum basis of each graded component.
 */

#include <functional>
#include <map>
#include <vector>

#include "hilb/graded_scalar.hpp"
#include "hilb/partition.hpp"
#include "hilb/report.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

using FockVector = SymFuncG;

/// The vacuum vector 1 (empty partition, coefficient 1, power-sum basis).
FockVector vacuum();

/// Basis vector p_lambda.
FockVector p_basis(const Partition& la);

struct HeisenbergMode {
    HeisenbergMode(int index, GradedScalar color);

    int index;            // nonzero
    GradedScalar color;   // class on the surface
};

/// Applies one mode; annihilation beyond the top degree gives zero.
FockVector heis_apply(const HeisenbergMode& mode, const FockVector& v);

/// <a, b> = -a*b/(e1*e2).
GradedScalar surface_pairing(const GradedScalar& a, const GradedScalar& b);

/// Pairing <p_lambda, p_mu> = delta * k^len * z_lambda extended bilinearly
/// over GradedScalar coefficients.
GradedScalar fock_pairing(const FockVector& v, const FockVector& w);

/// Verifies [P_i(a), P_j(b)] = i delta_{i+j,0} <a,b> id on every power-sum
/// basis vector of degree <= maxdeg.
Report commutator_check(int i, int j, const GradedScalar& alpha,
                        const GradedScalar& beta, int maxdeg);

/// Creation modes to the left, order within each group preserved.
std::vector<int> normal_order(std::vector<int> modes);

/// One scaled composition scale * P_{m_1}(1) ... P_{m_r}(1); the rightmost
/// factor acts first.
struct ModeComposition {
    GradedScalar scale;
    std::vector<int> modes;
};

class FockOperator {
public:
    FockOperator() = default;
    explicit FockOperator(std::vector<ModeComposition> terms);
    /// Terms supplied per source degree (for self-truncating families).
    explicit FockOperator(std::function<std::vector<ModeComposition>(int)> per_degree);

    FockVector apply(const FockVector& v) const;

    FockOperator& operator+=(const FockOperator& o);
    friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
    FockOperator scaled(const GradedScalar& s) const;

private:
    std::vector<ModeComposition> terms_;
    std::vector<std::function<std::vector<ModeComposition>(int)>> generators_;
};

/// (P_{m_1} ... P_{m_r})(alpha): the coproduct puts the factor -e1*e2 on
/// r - 1 slots, so the result is (-e1*e2)^{r-1} * alpha times the (optionally
/// normal-ordered) composition of color-1 modes.  A zero mode index makes the
/// whole composition the zero operator.
FockOperator coproduct_insert(const std::vector<int>& modes, const GradedScalar& alpha,
                              bool normal_ordered);

/// L_n(alpha) = (1/2) sum_{l+m=n} :P_l P_m:(alpha), truncated per component.
FockOperator virasoro(int n, const GradedScalar& alpha);

/// Multiplication by c_1 of the tautological sheaf:
///   -(1/6) sum_{i+j+l=0} :P_i P_j P_l:(1)
///   + (1/4) sum_{m != 0} (|m|-1) :P_{-m} P_m:(K)    with K = -e1 - e2.
/// Valid on components of degree <= maxdeg; throws beyond.
FockOperator lehn_cubic(int maxdeg);

/// Verifies [c_1 cup, P_n(alpha)] = n L_n(alpha) - n(|n|-1)/2 * P_n(K alpha)
/// on every power-sum basis vector of degree <= maxdeg.
Report lehn_commutator_check(int n, const GradedScalar& alpha, int maxdeg);

/// Columns of the operator on the degree-d component, keyed by partition.
std::map<Partition, FockVector> materialize(const FockOperator& op, int degree);

/// Equality of operator actions on all components of degree <= maxdeg.
bool operators_agree(const FockOperator& a, const FockOperator& b, int maxdeg);

}  // namespace hilb
