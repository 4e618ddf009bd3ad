#include "hilb/hilbloc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hilb/jack.hpp"

namespace hilb {

void LaurentChar::add(int a, int b, long mult) {
    if (mult <= 0) throw std::invalid_argument("LaurentChar: multiplicity must be positive");
    weights_[{a, b}] += mult;
}

long LaurentChar::dim() const {
    long d = 0;
    for (const auto& [w, m] : weights_) d += m;
    return d;
}

std::string LaurentChar::str() const {
    if (weights_.empty()) return "0";
    // Display order: higher total degree first, then higher t1 exponent.
    std::vector<std::pair<std::pair<int, int>, long>> terms(weights_.begin(), weights_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int sx = x.first.first + x.first.second;
        int sy = y.first.first + y.first.second;
        if (sx != sy) return sx > sy;
        return x.first.first > y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, m] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        const auto& [a, b] = w;
        if (a == 0 && b == 0) {
            os << "1";
            continue;
        }
        bool star = false;
        if (a != 0) {
            os << "t1";
            if (a != 1) os << "^" << a;
            star = true;
        }
        if (b != 0) {
            if (star) os << "*";
            os << "t2";
            if (b != 1) os << "^" << b;
        }
    }
    return os.str();
}

LaurentChar tangent_char(const Partition& la) {
    LaurentChar chi;
    for (const Box& s : boxes(la)) {
        BoxStats st = arm_leg(la, s);
        chi.add(st.leg + 1, -st.arm);
        chi.add(-st.leg, st.arm + 1);
    }
    return chi;
}

GradedScalar euler_class(const LaurentChar& chi) {
    Poly prod(1);
    long dim = 0;
    for (const auto& [w, m] : chi.weights()) {
        const auto& [a, b] = w;
        if (a == 0 && b == 0)
            throw ZeroWeightError("euler_class: trivial weight in " + chi.str());
        Poly factor{Rational(a), Rational(-b)};  // a - b*k
        for (long t = 0; t < m; ++t) prod *= factor;
        dim += m;
    }
    return GradedScalar(RationalFunction(prod), static_cast<int>(dim));
}

GradedScalar euler_nonpos(const Partition& la) {
    Poly prod(1);
    for (const Box& s : boxes(la)) {
        BoxStats st = arm_leg(la, s);
        prod *= Poly{Rational(st.leg + 1), Rational(st.arm)};
    }
    return GradedScalar(RationalFunction(prod), la.size());
}

GradedScalar euler_pos(const Partition& la) {
    return euler_class(tangent_char(la)) / euler_nonpos(la);
}

namespace {

int common_grade(const SymFuncG& v, const char* who) {
    int grade = -1;
    for (const auto& [la, c] : v.terms()) {
        if (grade == -1) grade = la.size();
        if (la.size() != grade)
            throw std::invalid_argument(std::string(who) + ": mixed grades in input");
    }
    return grade;
}

}  // namespace

SymFuncG fixed_to_monomial(const SymFuncG& v) {
    if (v.is_zero()) return SymFuncG(Basis::monomial);
    if (v.basis() != Basis::fixed_point)
        throw std::invalid_argument("fixed_to_monomial: input must be in the fixed basis");
    common_grade(v, "fixed_to_monomial");
    SymFuncG out(Basis::monomial);
    for (const auto& [la, c] : v.terms())
        out += lift(jack_function(la)).scaled(c * euler_nonpos(la));
    return out;
}

SymFuncG monomial_to_fixed(const SymFuncG& f) {
    if (f.is_zero()) return SymFuncG(Basis::fixed_point);
    if (f.basis() != Basis::monomial)
        throw std::invalid_argument("monomial_to_fixed: input must be in the monomial basis");
    int grade = common_grade(f, "monomial_to_fixed");
    SymFuncG rest = f;
    SymFuncG out(Basis::fixed_point);
    // The fixed basis is dominance-triangular over monomials, so peeling in
    // the enumerate order (largest first) terminates.
    for (const Partition& la : enumerate(grade)) {
        const GradedScalar& c = rest.coeff(la);
        if (c.is_zero()) continue;
        out.add_term(la, c / euler_nonpos(la));
        rest -= lift(jack_function(la)).scaled(c);
    }
    if (!rest.is_zero())
        throw std::logic_error("monomial_to_fixed: residue after elimination");
    return out;
}

GradedScalar localized_pairing(const SymFuncG& v, const SymFuncG& w) {
    if (v.is_zero() || w.is_zero()) return {};
    if (v.basis() != Basis::fixed_point || w.basis() != Basis::fixed_point)
        throw std::invalid_argument("localized_pairing: inputs must be in the fixed basis");
    int gv = common_grade(v, "localized_pairing");
    int gw = common_grade(w, "localized_pairing");
    if (gv != gw)
        throw std::invalid_argument("localized_pairing: grade mismatch");
    GradedScalar acc;
    for (const auto& [la, c] : v.terms()) {
        const GradedScalar& d = w.coeff(la);
        if (d.is_zero()) continue;
        acc += c * d * euler_class(tangent_char(la));
    }
    return gv % 2 ? -acc : acc;
}

GradedScalar c1_eigenvalue(const Partition& la) {
    return GradedScalar(jack_eigenvalue(la), 1);
}

LaurentChar nested_tangent_char(const Partition& mu, const Partition& lam) {
    if (!is_single_box_cover(mu, lam))
        throw std::invalid_argument("nested_tangent_char: " + lam.str() +
                                    " does not cover " + mu.str());
    LaurentChar chi;
    chi.add(1, 0);
    chi.add(0, 1);
    for (const Box& s : boxes(mu)) {
        BoxStats in_mu = arm_leg(mu, s);
        BoxStats in_lam = arm_leg(lam, s);
        chi.add(-in_lam.leg, in_mu.arm + 1);
        chi.add(in_mu.leg + 1, -in_lam.arm);
    }
    return chi;
}

Report nested_euler_identity_check(int maxn) {
    Report rep{"nested", maxn, 0, {}};
    for (int n = 1; n <= maxn; ++n) {
        for (const Partition& mu : enumerate(n - 1)) {
            GradedScalar pos_mu = euler_pos(mu);
            for (const auto& [lam, box] : add_box_targets(mu)) {
                GradedScalar lhs = euler_class(nested_tangent_char(mu, lam));
                RationalFunction ratio(1);
                for (const Box& s : pieri_R(mu, lam))
                    ratio *= pieri_b(mu, s) / pieri_b(lam, s);
                GradedScalar rhs = (gs_eps2() * pos_mu * euler_nonpos(lam)).scale(ratio);
                ++rep.checks;
                if (!(lhs == rhs))
                    rep.failures.push_back({"mu=" + mu.str() + " lam=" + lam.str(),
                                            lhs.str(), rhs.str()});
            }
        }
    }
    return rep;
}

Report triangularity_check(int maxn) {
    Report rep{"triangularity", maxn, 0, {}};
    for (int n = 0; n <= maxn; ++n) {
        for (const Partition& la : enumerate(n)) {
            SymFuncG fixed = monomial_to_fixed(
                SymFuncG::unit(Basis::monomial, la, gs_one()));
            ++rep.checks;
            for (const auto& [mu, c] : fixed.terms()) {
                DomRel rel = dominance_compare(mu, la);
                if (rel != DomRel::less && rel != DomRel::equal) {
                    rep.failures.push_back({"m" + la.str(),
                                            "support contains " + mu.str(),
                                            "support within {mu <= " + la.str() + "}"});
                    break;
                }
            }
        }
    }
    return rep;
}

}  // namespace hilb
