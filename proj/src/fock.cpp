#include "hilb/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hilb {

namespace {

// Scales applied by the color-1 modes: P_{-r}(1) multiplies by p_r and by
// 1/e2; P_m(1) differentiates and scales by -m/e1.
const GradedScalar& inv_eps2() {
    static const GradedScalar v = gs_one() / gs_eps2();
    return v;
}

const GradedScalar& inv_eps1() {
    static const GradedScalar v = gs_one() / gs_eps1();
    return v;
}

std::vector<int> with_part_added(std::vector<int> parts, int v) {
    auto it = std::upper_bound(parts.begin(), parts.end(), v, std::greater<int>());
    parts.insert(it, v);
    return parts;
}

std::vector<int> with_part_removed(std::vector<int> parts, int v) {
    auto it = std::find(parts.begin(), parts.end(), v);
    parts.erase(it);
    return parts;
}

// One color-1 mode applied to a single term.
void apply_unit_mode(int m, const Partition& la, const GradedScalar& coeff,
                     FockVector& out) {
    if (m < 0) {
        out.add_term(Partition(with_part_added(la.parts(), -m)), coeff * inv_eps2());
        return;
    }
    long mult = static_cast<long>(std::count(la.parts().begin(), la.parts().end(), m));
    if (!mult) return;
    GradedScalar c = (coeff * inv_eps1()).scale(Rational(-m * mult));
    out.add_term(Partition(with_part_removed(la.parts(), m)), c);
}

FockVector apply_unit_mode(int m, const FockVector& v) {
    FockVector out(Basis::power_sum);
    for (const auto& [la, c] : v.terms()) apply_unit_mode(m, la, c, out);
    return out;
}

}  // namespace

FockVector vacuum() {
    return SymFuncG::one(Basis::power_sum);
}

FockVector p_basis(const Partition& la) {
    return SymFuncG::unit(Basis::power_sum, la, gs_one());
}

HeisenbergMode::HeisenbergMode(int index_, GradedScalar color_)
    : index(index_), color(std::move(color_)) {
    if (index == 0) throw std::invalid_argument("HeisenbergMode: zero mode index");
}

FockVector heis_apply(const HeisenbergMode& mode, const FockVector& v) {
    if (!v.is_zero() && v.basis() != Basis::power_sum)
        throw std::invalid_argument("heis_apply: vector must be in the power-sum basis");
    FockVector out = apply_unit_mode(mode.index, v);
    return out.scaled(mode.color);
}

GradedScalar surface_pairing(const GradedScalar& a, const GradedScalar& b) {
    return -((a * b) / gs_c2x());
}

GradedScalar fock_pairing(const FockVector& v, const FockVector& w) {
    if (!v.is_zero() && v.basis() != Basis::power_sum)
        throw std::invalid_argument("fock_pairing: vectors must be in the power-sum basis");
    if (!w.is_zero() && w.basis() != Basis::power_sum)
        throw std::invalid_argument("fock_pairing: vectors must be in the power-sum basis");
    GradedScalar acc;
    for (const auto& [la, c] : v.terms()) {
        const GradedScalar& d = w.coeff(la);
        if (d.is_zero()) continue;
        acc += (c * d).scale(p_norm_factor(la));
    }
    return acc;
}

Report commutator_check(int i, int j, const GradedScalar& alpha,
                        const GradedScalar& beta, int maxdeg) {
    Report rep{"heisenberg", maxdeg, 0, {}};
    HeisenbergMode pi(i, alpha), pj(j, beta);
    GradedScalar central = i + j == 0 ? surface_pairing(alpha, beta).scale(Rational(i))
                                      : GradedScalar();
    for (int d = 0; d <= maxdeg; ++d) {
        for (const Partition& la : enumerate(d)) {
            FockVector v = p_basis(la);
            FockVector lhs = heis_apply(pi, heis_apply(pj, v)) -
                             heis_apply(pj, heis_apply(pi, v));
            FockVector rhs = v.scaled(central);
            ++rep.checks;
            if (!(lhs == rhs)) {
                std::ostringstream in;
                in << "[P_" << i << "(" << alpha << "), P_" << j << "(" << beta
                   << ")] on p" << la.str();
                rep.failures.push_back({in.str(), lhs.str(), rhs.str()});
            }
        }
    }
    return rep;
}

std::vector<int> normal_order(std::vector<int> modes) {
    std::stable_partition(modes.begin(), modes.end(), [](int m) { return m < 0; });
    return modes;
}

FockOperator::FockOperator(std::vector<ModeComposition> terms)
    : terms_(std::move(terms)) {}

FockOperator::FockOperator(std::function<std::vector<ModeComposition>(int)> per_degree) {
    generators_.push_back(std::move(per_degree));
}

FockVector FockOperator::apply(const FockVector& v) const {
    if (!v.is_zero() && v.basis() != Basis::power_sum)
        throw std::invalid_argument("FockOperator: vector must be in the power-sum basis");
    // Split by graded component so per-degree generators see a single degree.
    std::map<int, FockVector> graded;
    for (const auto& [la, c] : v.terms()) {
        auto [it, inserted] = graded.emplace(la.size(), FockVector(Basis::power_sum));
        it->second.add_term(la, c);
    }
    FockVector out(Basis::power_sum);
    for (const auto& [d, comp] : graded) {
        auto run = [&](const ModeComposition& term) {
            FockVector w = comp;
            for (auto it = term.modes.rbegin(); it != term.modes.rend() && !w.is_zero(); ++it)
                w = apply_unit_mode(*it, w);
            if (!w.is_zero()) out += w.scaled(term.scale);
        };
        for (const auto& term : terms_) run(term);
        for (const auto& gen : generators_)
            for (const auto& term : gen(d)) run(term);
    }
    return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    generators_.insert(generators_.end(), o.generators_.begin(), o.generators_.end());
    return *this;
}

FockOperator FockOperator::scaled(const GradedScalar& s) const {
    FockOperator r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.scale = t.scale * s;
    for (const auto& gen : generators_)
        r.generators_.push_back([gen, s](int d) {
            auto terms = gen(d);
            for (auto& t : terms) t.scale = t.scale * s;
            return terms;
        });
    return r;
}

FockOperator coproduct_insert(const std::vector<int>& modes, const GradedScalar& alpha,
                              bool normal_ordered) {
    if (modes.empty())
        throw std::invalid_argument("coproduct_insert: empty mode list");
    for (int m : modes)
        if (m == 0) return FockOperator{};  // P_0 = 0 kills the composition
    GradedScalar scale = alpha;
    for (size_t r = 1; r < modes.size(); ++r) scale = scale * (-gs_c2x());
    ModeComposition term{std::move(scale),
                         normal_ordered ? normal_order(modes) : modes};
    return FockOperator({std::move(term)});
}

FockOperator virasoro(int n, const GradedScalar& alpha) {
    return FockOperator([n, alpha](int d) {
        std::vector<ModeComposition> terms;
        int bound = d + std::abs(n);
        for (int m = -bound; m <= bound; ++m) {
            int l = n - m;
            if (m == 0 || l == 0 || std::abs(l) > bound) continue;
            GradedScalar scale = alpha.scale(Rational(1, 2)) * (-gs_c2x());
            terms.push_back({std::move(scale), normal_order({l, m})});
        }
        return terms;
    });
}

FockOperator lehn_cubic(int maxdeg) {
    return FockOperator([maxdeg](int d) {
        if (d > maxdeg)
            throw std::domain_error("lehn_cubic: component degree " + std::to_string(d) +
                                    " exceeds bound " + std::to_string(maxdeg));
        std::vector<ModeComposition> terms;
        // Cubic part: every contributing triple has all |m_i| <= d, since the
        // annihilators can remove at most d and the creations restore it.
        GradedScalar cubic_scale = (gs_c2x() * gs_c2x()).scale(Rational(-1, 6));
        for (int m1 = -d; m1 <= d; ++m1) {
            if (m1 == 0) continue;
            for (int m2 = -d; m2 <= d; ++m2) {
                if (m2 == 0) continue;
                int m3 = -m1 - m2;
                if (m3 == 0 || std::abs(m3) > d) continue;
                terms.push_back({cubic_scale, normal_order({m1, m2, m3})});
            }
        }
        // Quadratic part with color K = -e1 - e2.
        for (int m = -d; m <= d; ++m) {
            if (m == 0 || std::abs(m) == 1) continue;
            GradedScalar scale =
                (gs_kx() * (-gs_c2x())).scale(Rational(std::abs(m) - 1, 4));
            terms.push_back({std::move(scale), normal_order({-m, m})});
        }
        return terms;
    });
}

Report lehn_commutator_check(int n, const GradedScalar& alpha, int maxdeg) {
    Report rep{"lehn-commutator", maxdeg, 0, {}};
    if (n == 0) return rep;
    FockOperator cubic = lehn_cubic(maxdeg + std::abs(n));
    FockOperator ln = virasoro(n, alpha);
    HeisenbergMode pn(n, alpha);
    HeisenbergMode pnk(n, gs_kx() * alpha);
    Rational quad_weight(static_cast<long>(n) * (std::abs(n) - 1), 2);
    for (int d = 0; d <= maxdeg; ++d) {
        for (const Partition& la : enumerate(d)) {
            FockVector v = p_basis(la);
            FockVector lhs = cubic.apply(heis_apply(pn, v)) -
                             heis_apply(pn, cubic.apply(v));
            FockVector rhs = ln.apply(v).scaled(GradedScalar(Rational(n))) -
                             heis_apply(pnk, v).scaled(GradedScalar(quad_weight));
            ++rep.checks;
            if (!(lhs == rhs)) {
                std::ostringstream in;
                in << "[c1, P_" << n << "(" << alpha << ")] on p" << la.str();
                rep.failures.push_back({in.str(), lhs.str(), rhs.str()});
            }
        }
    }
    return rep;
}

std::map<Partition, FockVector> materialize(const FockOperator& op, int degree) {
    std::map<Partition, FockVector> cols;
    for (const Partition& la : enumerate(degree)) cols.emplace(la, op.apply(p_basis(la)));
    return cols;
}

bool operators_agree(const FockOperator& a, const FockOperator& b, int maxdeg) {
    for (int d = 0; d <= maxdeg; ++d)
        for (const Partition& la : enumerate(d))
            if (!(a.apply(p_basis(la)) == b.apply(p_basis(la)))) return false;
    return true;
}

}  // namespace hilb
