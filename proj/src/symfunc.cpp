#include "hilb/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hilb {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::power_sum: return "p";
        case Basis::fixed_point: return "fix";
    }
    return "?";
}

namespace {

// Multiset edits on sorted part lists.
std::vector<int> with_part_removed(std::vector<int> parts, int v) {
    auto it = std::find(parts.begin(), parts.end(), v);
    parts.erase(it);
    return parts;
}

std::vector<int> with_part_added(std::vector<int> parts, int v) {
    auto it = std::upper_bound(parts.begin(), parts.end(), v, std::greater<int>());
    parts.insert(it, v);
    return parts;
}

// p_r * m_mu in the monomial basis.  The coefficient of m_nu counts positions
// of nu whose part, reduced by r, leaves the multiset mu.
std::map<Partition, Rational> multiply_p_into_m(int r,
                                                const std::map<Partition, Rational>& f) {
    std::map<Partition, Rational> out;
    for (const auto& [mu, c] : f) {
        std::vector<Partition> candidates;
        candidates.push_back(Partition(with_part_added(mu.parts(), r)));
        for (size_t i = 0; i < mu.parts().size(); ++i) {
            if (i > 0 && mu.parts()[i] == mu.parts()[i - 1]) continue;
            std::vector<int> parts = mu.parts();
            parts.erase(parts.begin() + static_cast<long>(i));
            candidates.push_back(Partition(with_part_added(std::move(parts),
                                                           mu.parts()[i] + r)));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        for (const auto& nu : candidates) {
            long count = 0;
            const auto& np = nu.parts();
            for (size_t j = 0; j < np.size(); ++j) {
                if (np[j] < r) break;
                std::vector<int> rest = np;
                rest.erase(rest.begin() + static_cast<long>(j));
                if (np[j] > r) rest = with_part_added(std::move(rest), np[j] - r);
                if (rest == mu.parts()) ++count;
            }
            if (count) out[nu] += c * Rational(count);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

struct SymCache::Impl {
    int degree_cap;
    mutable std::mutex mu;
    mutable std::map<int, std::shared_ptr<const Table>> tables;
};

SymCache::SymCache(int degree_cap) : impl_(std::make_shared<Impl>()) {
    if (degree_cap < 0) throw std::invalid_argument("SymCache: negative degree cap");
    impl_->degree_cap = degree_cap;
}

int SymCache::degree_cap() const {
    std::lock_guard lock(impl_->mu);
    return impl_->degree_cap;
}

void SymCache::raise_degree_cap(int cap) {
    std::lock_guard lock(impl_->mu);
    impl_->degree_cap = std::max(impl_->degree_cap, cap);
}

std::shared_ptr<const SymCache::Table> SymCache::table(int n) const {
    {
        std::lock_guard lock(impl_->mu);
        if (n < 0 || n > impl_->degree_cap)
            throw std::domain_error("SymCache: degree " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(impl_->degree_cap));
        auto it = impl_->tables.find(n);
        if (it != impl_->tables.end()) return it->second;
    }

    auto t = std::make_shared<Table>();
    t->order = enumerate(n);
    int dim = static_cast<int>(t->order.size());
    for (int i = 0; i < dim; ++i) t->index.emplace(t->order[i], i);

    t->p_to_m.assign(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        std::map<Partition, Rational> exp{{Partition{}, Rational(1)}};
        for (int part : t->order[static_cast<size_t>(i)].parts())
            exp = multiply_p_into_m(part, exp);
        for (const auto& [nu, c] : exp)
            t->p_to_m[static_cast<size_t>(i)][static_cast<size_t>(t->index.at(nu))] = c;
    }

    // p_mu = sum_{lam} R[mu][lam] m_lam is lower triangular in the enumerate
    // order (merging parts moves up in dominance, hence to smaller indices),
    // so the inverse comes from forward substitution row by row.
    const auto& R = t->p_to_m;
    t->m_to_p.assign(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim)));
    auto& M = t->m_to_p;
    for (int i = 0; i < dim; ++i) {
        Rational inv = Rational(1) / R[static_cast<size_t>(i)][static_cast<size_t>(i)];
        M[static_cast<size_t>(i)][static_cast<size_t>(i)] = inv;
        for (int j = 0; j < i; ++j) {
            Rational acc;
            for (int tcol = j; tcol < i; ++tcol)
                acc += R[static_cast<size_t>(i)][static_cast<size_t>(tcol)] *
                       M[static_cast<size_t>(tcol)][static_cast<size_t>(j)];
            if (!acc.is_zero()) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = -acc * inv;
        }
    }

    std::lock_guard lock(impl_->mu);
    auto [it, inserted] = impl_->tables.emplace(n, std::move(t));
    return it->second;
}

SymCache& global_sym_cache() {
    static SymCache cache(10);
    return cache;
}

RationalFunction p_norm_factor(const Partition& la) {
    std::vector<Rational> coeffs(static_cast<size_t>(la.length()) + 1);
    coeffs[static_cast<size_t>(la.length())] = Rational(z_stat(la), mpz_class(1));
    return RationalFunction(Poly(std::move(coeffs)));
}

template <class Coeff>
SymFunc<Coeff> p_to_m(const SymFunc<Coeff>& f, const SymCache& cache) {
    if (f.is_zero()) return SymFunc<Coeff>(Basis::monomial);
    if (f.basis() != Basis::power_sum)
        throw std::invalid_argument("p_to_m: input must be in the power-sum basis");
    SymFunc<Coeff> out(Basis::monomial);
    for (const auto& [la, c] : f.terms()) {
        auto t = cache.table(la.size());
        const auto& row = t->p_to_m[static_cast<size_t>(t->index.at(la))];
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero())
                out.add_term(t->order[j], coeff_scaled(c, row[j]));
    }
    return out;
}

template <class Coeff>
SymFunc<Coeff> m_to_p(const SymFunc<Coeff>& f, const SymCache& cache) {
    if (f.is_zero()) return SymFunc<Coeff>(Basis::power_sum);
    if (f.basis() != Basis::monomial)
        throw std::invalid_argument("m_to_p: input must be in the monomial basis");
    SymFunc<Coeff> out(Basis::power_sum);
    for (const auto& [la, c] : f.terms()) {
        auto t = cache.table(la.size());
        const auto& row = t->m_to_p[static_cast<size_t>(t->index.at(la))];
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero())
                out.add_term(t->order[j], coeff_scaled(c, row[j]));
    }
    return out;
}

SymFuncG lift(const SymFuncR& f) {
    SymFuncG out(f.basis());
    for (const auto& [la, c] : f.terms()) out.add_term(la, GradedScalar(c));
    return out;
}

template <class Coeff>
Coeff inner_product(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g,
                    const SymCache& cache) {
    auto to_p = [&cache](const SymFunc<Coeff>& h) {
        if (h.is_zero() || h.basis() == Basis::power_sum) return h;
        if (h.basis() == Basis::monomial) return m_to_p(h, cache);
        throw std::invalid_argument("inner_product: fixed-point basis not supported");
    };
    SymFunc<Coeff> fp = to_p(f);
    SymFunc<Coeff> gp = to_p(g);
    Coeff acc{};
    for (const auto& [la, c] : fp.terms()) {
        const Coeff& d = gp.coeff(la);
        if (d.is_zero()) continue;
        acc += coeff_scaled(c * d, p_norm_factor(la));
    }
    return acc;
}

template <class Coeff>
SymFunc<Coeff> multiply(const SymFunc<Coeff>& f, const SymFunc<Coeff>& g) {
    if (f.is_zero() || g.is_zero()) return SymFunc<Coeff>(Basis::power_sum);
    if (f.basis() != Basis::power_sum || g.basis() != Basis::power_sum)
        throw std::invalid_argument("multiply: inputs must be in the power-sum basis");
    SymFunc<Coeff> out(Basis::power_sum);
    for (const auto& [la, c] : f.terms())
        for (const auto& [mu, d] : g.terms()) {
            std::vector<int> parts = la.parts();
            for (int v : mu.parts()) parts = with_part_added(std::move(parts), v);
            out.add_term(Partition(std::move(parts)), c * d);
        }
    return out;
}

template <class Coeff>
SymFunc<Coeff> box_hamiltonian(const SymFunc<Coeff>& f) {
    if (f.is_zero()) return SymFunc<Coeff>(Basis::power_sum);
    if (f.basis() != Basis::power_sum)
        throw std::invalid_argument("box_hamiltonian: input must be in the power-sum basis");
    const RationalFunction k = RationalFunction::k();
    const RationalFunction half(Rational(1, 2));
    SymFunc<Coeff> out(Basis::power_sum);
    for (const auto& [la, c] : f.terms()) {
        std::map<int, int> mult;
        for (int v : la.parts()) ++mult[v];
        // (k/2) m n p_{m+n} d_m d_n over ordered pairs of part values.
        for (const auto& [m, em] : mult)
            for (const auto& [n, en] : mult) {
                long count = (m == n) ? static_cast<long>(em) * (em - 1)
                                      : static_cast<long>(em) * en;
                if (!count) continue;
                auto parts = with_part_removed(la.parts(), m);
                parts = with_part_removed(std::move(parts), n);
                parts = with_part_added(std::move(parts), m + n);
                RationalFunction w = k * half * RationalFunction(Rational(static_cast<long>(m) * n * count));
                out.add_term(Partition(std::move(parts)), coeff_scaled(c, w));
            }
        // ((k-1)/2) m (m-1) p_m d_m.
        RationalFunction diag;
        for (const auto& [m, em] : mult)
            diag += (k - RationalFunction(1)) * half *
                    RationalFunction(Rational(static_cast<long>(m) * (m - 1) * em));
        if (!diag.is_zero()) out.add_term(la, coeff_scaled(c, diag));
        // (1/2)(m+n) p_m p_n d_{m+n} over ordered splits of present values.
        for (const auto& [v, ev] : mult)
            for (int m = 1; m < v; ++m) {
                int n = v - m;
                auto parts = with_part_removed(la.parts(), v);
                parts = with_part_added(std::move(parts), m);
                parts = with_part_added(std::move(parts), n);
                RationalFunction w = half * RationalFunction(Rational(static_cast<long>(v) * ev));
                out.add_term(Partition(std::move(parts)), coeff_scaled(c, w));
            }
    }
    return out;
}

template SymFuncR p_to_m(const SymFuncR&, const SymCache&);
template SymFuncG p_to_m(const SymFuncG&, const SymCache&);
template SymFuncR m_to_p(const SymFuncR&, const SymCache&);
template SymFuncG m_to_p(const SymFuncG&, const SymCache&);
template RationalFunction inner_product(const SymFuncR&, const SymFuncR&, const SymCache&);
template GradedScalar inner_product(const SymFuncG&, const SymFuncG&, const SymCache&);
template SymFuncR multiply(const SymFuncR&, const SymFuncR&);
template SymFuncG multiply(const SymFuncG&, const SymFuncG&);
template SymFuncR box_hamiltonian(const SymFuncR&);
template SymFuncG box_hamiltonian(const SymFuncG&);

}  // namespace hilb
