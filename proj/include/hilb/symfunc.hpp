#pragma once

/**
 * @file symfunc.hpp
 * @brief Symmetric functions as sparse maps from partitions to coefficients.
 *
 * A SymFunc carries a basis tag (monomial, power-sum, or fixed-point) and a
 * finitely supported map partition -> coefficient with no zero entries.
 * Coefficients are RationalFunction for the classical bases and GradedScalar
 * where equivariant weights are in play; the container is the same template.
 *
 * Basis conversions go through per-degree transition matrices cached in a
 * SymCache.  The cache enforces a degree cap fixed at construction (default
 * 10): conversions beyond the cap throw instead of silently truncating.
 */

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilb/graded_scalar.hpp"
#include "hilb/partition.hpp"
#include "hilb/rational_function.hpp"

namespace hilb {

enum class Basis { monomial, power_sum, fixed_point };

std::string basis_name(Basis b);

/// True when s is a single balanced "(...)" group, so it needs no extra wrap.
inline bool is_wrapped(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return false;
    }
    return true;
}

/// Uniform scaling of the two coefficient kinds by scalars of either kind.
inline RationalFunction coeff_scaled(const RationalFunction& c, const Rational& f) {
    return c * RationalFunction(f);
}
inline RationalFunction coeff_scaled(const RationalFunction& c, const RationalFunction& f) {
    return c * f;
}
inline GradedScalar coeff_scaled(const GradedScalar& c, const Rational& f) {
    return c.scale(f);
}
inline GradedScalar coeff_scaled(const GradedScalar& c, const RationalFunction& f) {
    return c.scale(f);
}
inline GradedScalar coeff_scaled(const GradedScalar& c, const GradedScalar& f) {
    return c * f;
}

template <class Coeff>
class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc unit(Basis b, const Partition& la, const Coeff& c) {
        SymFunc f(b);
        f.add_term(la, c);
        return f;
    }
    /// The constant 1 of the given basis (empty partition, coefficient 1).
    static SymFunc one(Basis b) { return unit(b, Partition{}, Coeff(1)); }

    Basis basis() const { return basis_; }
    const std::map<Partition, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Coeff& coeff(const Partition& la) const {
        static const Coeff zero{};
        auto it = terms_.find(la);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const Partition& la, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(la, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        require_same_basis(o);
        for (const auto& [la, c] : o.terms_) add_term(la, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        require_same_basis(o);
        for (const auto& [la, c] : o.terms_) add_term(la, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

    SymFunc operator-() const {
        SymFunc r(basis_);
        for (const auto& [la, c] : terms_) r.terms_.emplace(la, -c);
        return r;
    }

    template <class Scalar>
    SymFunc scaled(const Scalar& s) const {
        SymFunc r(basis_);
        for (const auto& [la, c] : terms_) r.add_term(la, coeff_scaled(c, s));
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return (a.is_zero() && b.is_zero()) ||
               (a.basis_ == b.basis_ && a.terms_ == b.terms_);
    }

    /// e.g. "m[2] + (2/(1 + k))*m[1,1]"; "0" when zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string prefix = basis_ == Basis::monomial    ? "m"
                           : basis_ == Basis::power_sum   ? "p"
                                                          : "I";
        std::ostringstream os;
        bool first = true;
        for (const auto& [la, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string cs = c.str();
            if (cs != "1") {
                bool plain = cs.find_first_not_of("0123456789") == std::string::npos;
                if (!plain && !is_wrapped(cs)) cs = "(" + cs + ")";
                os << cs << "*";
            }
            os << prefix << la.str();
        }
        return os.str();
    }

private:
    void require_same_basis(const SymFunc& o) const {
        if (!is_zero() && !o.is_zero() && basis_ != o.basis_)
            throw std::invalid_argument("SymFunc: basis mismatch (" + basis_name(basis_) +
                                        " vs " + basis_name(o.basis_) + ")");
    }

    Basis basis_ = Basis::monomial;
    std::map<Partition, Coeff> terms_;  // values nonzero
};

using SymFuncR = SymFunc<RationalFunction>;
using SymFuncG = SymFunc<GradedScalar>;

/// Per-degree transition matrices between the power-sum and monomial bases,
/// indexed by the enumerate() order.  Thread-safe; each table fills once.
class SymCache {
public:
    explicit SymCache(int degree_cap = 10);

    int degree_cap() const;
    /// Raises (never lowers) the cap; intended for startup configuration.
    void raise_degree_cap(int cap);

    struct Table {
        std::vector<Partition> order;                    // enumerate(n)
        std::map<Partition, int> index;
        std::vector<std::vector<Rational>> p_to_m;       // row mu: p_mu in m-basis
        std::vector<std::vector<Rational>> m_to_p;       // row mu: m_mu in p-basis
    };

    /// Throws std::domain_error when n exceeds the cap.
    std::shared_ptr<const Table> table(int n) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Shared process-wide cache (cap 10 unless raised).
SymCache& global_sym_cache();

/// Expansion of a power-sum element in the monomial basis.
template <class Coeff>
SymFunc<Coeff> p_to_m(const SymFunc<Coeff>& f, const SymCache& cache = global_sym_cache());

/// Expansion of a monomial element in the power-sum basis.
template <class Coeff>
SymFunc<Coeff> m_to_p(const SymFunc<Coeff>& f, const SymCache& cache = global_sym_cache());

/// Coefficient-wise lift into GradedScalar (degree 0).
SymFuncG lift(const SymFuncR& f);

/// <p_lambda, p_mu> = delta * k^{len(lambda)} * z_lambda, extended bilinearly.
/// Inputs may be in either classical basis.
template <class Coeff>
Coeff inner_product(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g,
                    const SymCache& cache = global_sym_cache());

/// k^{len(lambda)} * z_lambda as an element of Q(k).
RationalFunction p_norm_factor(const Partition& la);

/// Product of two power-sum elements (parts concatenate, coefficients multiply).
template <class Coeff>
SymFunc<Coeff> multiply(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g);

/// The Hamiltonian whose eigenvectors are the Jack functions:
///   (k/2)   sum_{m,n>0} m n p_{m+n} d_m d_n
/// + (k-1)/2 sum_{m>0}   m (m-1) p_m d_m
/// + 1/2     sum_{m,n>0} (m+n) p_m p_n d_{m+n}
/// acting on the power-sum basis (degree-preserving).
template <class Coeff>
SymFunc<Coeff> box_hamiltonian(const SymFunc<Coeff>& f);

}  // namespace hilb
