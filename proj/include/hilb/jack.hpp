#pragma once

/**
 * @file jack.hpp
 * @brief Jack symmetric functions P_lambda over Q(k), built two ways.
 *
 * Normalization: monic in the monomial basis (coefficient of m_lambda is 1)
 * with support only on dominance-smaller partitions.  The two constructions
 * are independent and must agree:
 *   - Gram-Schmidt against <p_lambda, p_mu> = delta * k^len * z_lambda,
 *     processed in the dominance-refining lex order from below;
 *   - eigenvectors of the box Hamiltonian with eigenvalue
 *     e_lambda(k) = n(lambda') * k - n(lambda), by back-substitution.
 */

#include <map>
#include <string>
#include <vector>

#include "hilb/partition.hpp"
#include "hilb/rational_function.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

enum class JackAlgorithm { gram_schmidt, hamiltonian };

std::string algorithm_name(JackAlgorithm a);

struct JackFamily {
    int degree = 0;
    JackAlgorithm algorithm = JackAlgorithm::gram_schmidt;
    std::vector<Partition> order;                 // enumerate(degree)
    std::map<Partition, SymFuncR> functions;      // monomial-basis expansions
};

/// Builds the degree-n family by Gram-Schmidt from the dominance-minimal end.
JackFamily jack_gram_schmidt(int n, const SymCache& cache = global_sym_cache());

/// Builds the degree-n family by solving (box - e_lambda) P = 0 with
/// back-substitution along the lex order; verifies dominance support.
JackFamily jack_hamiltonian(int n, const SymCache& cache = global_sym_cache());

/// Memoized family (uses the global cache); thread-safe, fills once per key.
const JackFamily& jack_family(int n, JackAlgorithm alg = JackAlgorithm::gram_schmidt);

/// Memoized single function in the monomial basis.
const SymFuncR& jack_function(const Partition& la,
                              JackAlgorithm alg = JackAlgorithm::gram_schmidt);

/// Box Hamiltonian eigenvalue e_lambda(k) = n(lambda') * k - n(lambda).
RationalFunction jack_eigenvalue(const Partition& la);

/// <P_lambda, P_lambda> = prod_s (l + (a+1)k) / ((l+1) + a k) over boxes s.
RationalFunction norm_formula(const Partition& la);

/// c_lambda(k) = prod_s ((l+1) + a k); J_lambda = c_lambda * P_lambda.
RationalFunction integral_form_scalar(const Partition& la);

/// The Pieri weight b_lambda(s) = (l+1 + k a) / (l + k (a+1)) of a box.
RationalFunction pieri_b(const Partition& la, const Box& s);

/// Coefficient of P_lambda in p_1 * P_mu: prod_{s in R} b_lambda(s)/b_mu(s).
/// Throws std::invalid_argument when lam does not cover mu.
RationalFunction pieri_coefficient(const Partition& mu, const Partition& lam);

/// P_lambda at k = 1 (the Schur function), monomial basis with constant
/// coefficients.
SymFuncR schur_specialize(const Partition& la);

/// Dense polynomial in X over Q(k); just enough for diagonal matrix elements.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<RationalFunction> coeffs);
    static XPoly linear(const RationalFunction& constant);  // X + constant

    const std::vector<RationalFunction>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

    /// e.g. "X^2 + (1 + 3k)*X + (2k^2 + k)".
    std::string str() const;

private:
    void trim();
    std::vector<RationalFunction> c_;  // c_[i] multiplies X^i
};

/// c_{lambda,lambda}(X; k) = prod_{i=1..N} (X + N - i + k*lambda_i).
/// Throws std::invalid_argument when N < length(lambda).
XPoly c_diag(const Partition& la, int N);

}  // namespace hilb
