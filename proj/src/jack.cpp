#include "hilb/jack.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hilb {

std::string algorithm_name(JackAlgorithm a) {
    return a == JackAlgorithm::gram_schmidt ? "gram-schmidt" : "hamiltonian";
}

RationalFunction jack_eigenvalue(const Partition& la) {
    return RationalFunction(Poly{Rational(-n_stat(la)), Rational(n_stat(la.conjugate()))});
}

JackFamily jack_gram_schmidt(int n, const SymCache& cache) {
    JackFamily fam;
    fam.degree = n;
    fam.algorithm = JackAlgorithm::gram_schmidt;
    fam.order = enumerate(n);
    if (n > cache.degree_cap())
        throw std::domain_error("jack_gram_schmidt: degree exceeds cache cap");

    // Work from the dominance-minimal end ([1^n] upward); keep power-sum
    // expansions alongside to make inner products cheap.
    std::vector<std::pair<Partition, SymFuncR>> built_p;
    std::vector<RationalFunction> norms;
    for (auto it = fam.order.rbegin(); it != fam.order.rend(); ++it) {
        const Partition& la = *it;
        SymFuncR f = SymFuncR::unit(Basis::monomial, la, RationalFunction(1));
        SymFuncR fp = m_to_p(f, cache);
        for (size_t j = 0; j < built_p.size(); ++j) {
            RationalFunction proj = inner_product(fp, built_p[j].second, cache);
            if (proj.is_zero()) continue;
            proj = proj / norms[j];
            SymFuncR adj = built_p[j].second.scaled(proj);
            fp -= adj;
            f -= fam.functions.at(built_p[j].first).scaled(proj);
        }
        norms.push_back(inner_product(fp, fp, cache));
        if (norms.back().is_zero())
            throw std::logic_error("jack_gram_schmidt: degenerate norm at " + la.str());
        fam.functions.emplace(la, f);
        built_p.emplace_back(la, std::move(fp));
    }
    return fam;
}

JackFamily jack_hamiltonian(int n, const SymCache& cache) {
    JackFamily fam;
    fam.degree = n;
    fam.algorithm = JackAlgorithm::hamiltonian;
    fam.order = enumerate(n);
    if (n > cache.degree_cap())
        throw std::domain_error("jack_hamiltonian: degree exceeds cache cap");

    int dim = static_cast<int>(fam.order.size());
    std::map<Partition, int> index;
    for (int i = 0; i < dim; ++i) index.emplace(fam.order[static_cast<size_t>(i)], i);

    // H[i][j] = coefficient of m_i in box(m_j); lower triangular in the
    // enumerate order since box lowers dominance.
    std::vector<std::vector<RationalFunction>> H(
        static_cast<size_t>(dim), std::vector<RationalFunction>(static_cast<size_t>(dim)));
    for (int j = 0; j < dim; ++j) {
        SymFuncR col = p_to_m(
            box_hamiltonian(m_to_p(SymFuncR::unit(Basis::monomial,
                                                  fam.order[static_cast<size_t>(j)],
                                                  RationalFunction(1)),
                                   cache)),
            cache);
        for (const auto& [mu, c] : col.terms())
            H[static_cast<size_t>(index.at(mu))][static_cast<size_t>(j)] = c;
    }

    std::vector<RationalFunction> eigen;
    eigen.reserve(static_cast<size_t>(dim));
    for (const auto& la : fam.order) eigen.push_back(jack_eigenvalue(la));

    for (int i = 0; i < dim; ++i) {
        const Partition& la = fam.order[static_cast<size_t>(i)];
        std::vector<RationalFunction> u(static_cast<size_t>(dim));
        u[static_cast<size_t>(i)] = RationalFunction(1);
        for (int j = i + 1; j < dim; ++j) {
            RationalFunction acc;
            for (int t = i; t < j; ++t) {
                const RationalFunction& h = H[static_cast<size_t>(j)][static_cast<size_t>(t)];
                if (!h.is_zero() && !u[static_cast<size_t>(t)].is_zero())
                    acc += h * u[static_cast<size_t>(t)];
            }
            if (acc.is_zero()) continue;  // no coupling; leave u_j = 0
            RationalFunction denom = eigen[static_cast<size_t>(i)] - eigen[static_cast<size_t>(j)];
            if (denom.is_zero())
                throw std::logic_error("jack_hamiltonian: coupled equal eigenvalues at " +
                                       la.str() + " / " + fam.order[static_cast<size_t>(j)].str());
            u[static_cast<size_t>(j)] = acc / denom;
        }
        SymFuncR f(Basis::monomial);
        for (int j = i; j < dim; ++j) {
            if (u[static_cast<size_t>(j)].is_zero()) continue;
            const Partition& mu = fam.order[static_cast<size_t>(j)];
            if (j != i) {
                DomRel rel = dominance_compare(mu, la);
                if (rel != DomRel::less)
                    throw std::logic_error("jack_hamiltonian: support of " + la.str() +
                                           " escapes dominance at " + mu.str());
            }
            f.add_term(mu, u[static_cast<size_t>(j)]);
        }
        fam.functions.emplace(la, std::move(f));
    }
    return fam;
}

namespace {

struct FamilyKey {
    int degree;
    JackAlgorithm alg;
    friend bool operator<(const FamilyKey& a, const FamilyKey& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.alg < b.alg;
    }
};

}  // namespace

const JackFamily& jack_family(int n, JackAlgorithm alg) {
    static std::mutex mu;
    static std::map<FamilyKey, JackFamily> memo;
    std::lock_guard lock(mu);
    FamilyKey key{n, alg};
    auto it = memo.find(key);
    if (it == memo.end()) {
        JackFamily fam = alg == JackAlgorithm::gram_schmidt ? jack_gram_schmidt(n)
                                                            : jack_hamiltonian(n);
        it = memo.emplace(key, std::move(fam)).first;
    }
    return it->second;
}

const SymFuncR& jack_function(const Partition& la, JackAlgorithm alg) {
    return jack_family(la.size(), alg).functions.at(la);
}

RationalFunction norm_formula(const Partition& la) {
    RationalFunction r(1);
    for (const Box& s : boxes(la)) {
        BoxStats st = arm_leg(la, s);
        r *= RationalFunction(Poly{Rational(st.leg), Rational(st.arm + 1)},
                              Poly{Rational(st.leg + 1), Rational(st.arm)});
    }
    return r;
}

RationalFunction integral_form_scalar(const Partition& la) {
    Poly p(1);
    for (const Box& s : boxes(la)) {
        BoxStats st = arm_leg(la, s);
        p *= Poly{Rational(st.leg + 1), Rational(st.arm)};
    }
    return RationalFunction(p);
}

RationalFunction pieri_b(const Partition& la, const Box& s) {
    BoxStats st = arm_leg(la, s);
    return RationalFunction(Poly{Rational(st.leg + 1), Rational(st.arm)},
                            Poly{Rational(st.leg), Rational(st.arm + 1)});
}

RationalFunction pieri_coefficient(const Partition& mu, const Partition& lam) {
    RationalFunction r(1);
    for (const Box& s : pieri_R(mu, lam)) r *= pieri_b(lam, s) / pieri_b(mu, s);
    return r;
}

SymFuncR schur_specialize(const Partition& la) {
    const SymFuncR& p = jack_function(la);
    SymFuncR out(Basis::monomial);
    for (const auto& [mu, c] : p.terms())
        out.add_term(mu, RationalFunction(c.eval(Rational(1))));
    return out;
}

XPoly::XPoly(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::linear(const RationalFunction& constant) {
    return XPoly({constant, RationalFunction(1)});
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    XPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, RationalFunction());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::string XPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RationalFunction& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c.str();
            continue;
        }
        if (!c.is_one()) os << c.str() << "*";
        os << "X";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

XPoly c_diag(const Partition& la, int N) {
    if (N < la.length())
        throw std::invalid_argument("c_diag: N smaller than the length of " + la.str());
    XPoly r({RationalFunction(1)});
    for (int i = 1; i <= N; ++i)
        r = r * XPoly::linear(RationalFunction(Poly{Rational(N - i), Rational(la.part(i))}));
    return r;
}

}  // namespace hilb
