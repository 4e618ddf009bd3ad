#include "hilb/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hilb/fock.hpp"
#include "hilb/hilbloc.hpp"
#include "hilb/jack.hpp"
#include "hilb/partition.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

namespace {

std::vector<Partition> partitions_up_to(int maxdeg) {
    std::vector<Partition> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (const Partition& la : enumerate(d)) out.push_back(la);
    return out;
}

std::optional<CheckFailure> fail(std::string input, std::string lhs, std::string rhs) {
    return CheckFailure{std::move(input), std::move(lhs), std::move(rhs)};
}

void collect(Report& rep, const std::vector<std::optional<CheckFailure>>& results) {
    for (const auto& r : results)
        if (r) rep.failures.push_back(*r);
}

// Small random graded scalars for the linearity spot checks.
GradedScalar random_graded(std::mt19937_64& rng) {
    auto coeff = [&rng] { return Rational(static_cast<long>(rng() % 7) - 3); };
    while (true) {
        GradedScalar g;
        int nterms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < nterms; ++t) {
            int deg = static_cast<int>(rng() % 5) - 2;
            Poly num{coeff(), coeff(), coeff()};
            Poly den = rng() % 2 ? Poly(1)
                                 : Poly{Rational(static_cast<long>(rng() % 3) + 1), Rational(1)};
            if (num.is_zero()) continue;
            g += GradedScalar(RationalFunction(num, den), deg);
        }
        if (!g.is_zero()) return g;
    }
}

const std::vector<GradedScalar>& surface_colors() {
    static const std::vector<GradedScalar> colors{gs_one(), gs_eps1(), gs_eps2(),
                                                  gs_eps1() * gs_eps2()};
    return colors;
}

Report suite_heisenberg(int maxdeg, std::uint64_t seed) {
    Report rep{"heisenberg", maxdeg, 0, {}};
    std::vector<Partition> vectors = partitions_up_to(maxdeg);
    const auto& colors = surface_colors();

    struct Case { int i, j; size_t a, b; };
    std::vector<Case> cases;
    for (int i = -5; i <= 5; ++i) {
        if (i == 0) continue;
        for (int j = -5; j <= 5; ++j) {
            if (j == 0) continue;
            for (size_t a = 0; a < colors.size(); ++a)
                for (size_t b = 0; b < colors.size(); ++b) cases.push_back({i, j, a, b});
        }
    }

    auto results = run_checks(cases.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Case& c = cases[idx];
        HeisenbergMode pi(c.i, colors[c.a]), pj(c.j, colors[c.b]);
        GradedScalar central = c.i + c.j == 0
            ? surface_pairing(colors[c.a], colors[c.b]).scale(Rational(c.i))
            : GradedScalar();
        for (const Partition& la : vectors) {
            FockVector v = p_basis(la);
            FockVector lhs = heis_apply(pi, heis_apply(pj, v)) -
                             heis_apply(pj, heis_apply(pi, v));
            FockVector rhs = v.scaled(central);
            if (!(lhs == rhs)) {
                std::ostringstream in;
                in << "[P_" << c.i << "(" << colors[c.a] << "), P_" << c.j << "("
                   << colors[c.b] << ")] on p" << la.str();
                return fail(in.str(), lhs.str(), rhs.str());
            }
        }
        return std::nullopt;
    });
    rep.checks += static_cast<long>(cases.size() * vectors.size());
    collect(rep, results);

    // Linearity in the color over H*_T(pt): P_m(f*a) = f * P_m(a).
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 24; ++t) {
        int m = (static_cast<int>(rng() % 5) + 1) * (rng() % 2 ? 1 : -1);
        const GradedScalar& base = colors[rng() % colors.size()];
        GradedScalar f = random_graded(rng);
        const Partition& la = vectors[rng() % vectors.size()];
        FockVector lhs = heis_apply(HeisenbergMode(m, f * base), p_basis(la));
        FockVector rhs = heis_apply(HeisenbergMode(m, base), p_basis(la)).scaled(f);
        ++rep.checks;
        if (!(lhs == rhs)) {
            std::ostringstream in;
            in << "linearity: P_" << m << "((" << f << ")*(" << base << ")) on p" << la.str();
            rep.failures.push_back({in.str(), lhs.str(), rhs.str()});
        }
    }
    return rep;
}

// Columns of L_n(color) per graded component, built once and shared read-only.
class VirasoroColumns {
public:
    VirasoroColumns(int maxdeg, const std::vector<GradedScalar>& colors)
        : colors_(colors) {
        for (int n = -3; n <= 3; ++n)
            for (size_t c = 0; c < 2 && c < colors_.size(); ++c)
                build(n, c, maxdeg + 3);
        for (int n = -6; n <= 6; ++n)
            for (size_t c = 0; c < colors_.size(); ++c) build(n, c, maxdeg);
    }

    FockVector apply(int n, size_t cidx, const FockVector& v) const {
        FockVector out(Basis::power_sum);
        const auto& table = cols_.at({n, cidx});
        for (const auto& [la, c] : v.terms()) {
            auto it = table.find(la);
            if (it == table.end())
                throw std::logic_error("VirasoroColumns: missing column");
            if (!it->second.is_zero()) out += it->second.scaled(c);
        }
        return out;
    }

private:
    void build(int n, size_t cidx, int max_size) {
        auto& table = cols_[{n, cidx}];
        FockOperator op = virasoro(n, colors_[cidx]);
        for (int d = 0; d <= max_size; ++d)
            for (const Partition& la : enumerate(d))
                if (table.find(la) == table.end()) table.emplace(la, op.apply(p_basis(la)));
    }

    std::vector<GradedScalar> colors_;
    std::map<std::pair<int, size_t>, std::map<Partition, FockVector>> cols_;
};

Report suite_virasoro(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"virasoro", maxdeg, 0, {}};
    std::vector<Partition> vectors = partitions_up_to(maxdeg);
    // Colors 1 and e2; index 2 holds the product e2*e2 for the right side.
    std::vector<GradedScalar> colors{gs_one(), gs_eps2(), gs_eps2() * gs_eps2()};
    VirasoroColumns cols(maxdeg, colors);

    struct Case { int n, m; size_t a, b; };
    std::vector<Case> cases;
    for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            for (size_t a = 0; a < 2; ++a)
                for (size_t b = 0; b < 2; ++b) cases.push_back({n, m, a, b});

    auto results = run_checks(cases.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Case& c = cases[idx];
        size_t prod = c.a + c.b;  // color products line up as 1, e2, e2^2
        Rational scale(static_cast<long>(c.n) - c.m);
        GradedScalar central;
        if (c.n + c.m == 0) {
            long n3 = static_cast<long>(c.n) * c.n * c.n;
            central = (colors[c.a] * colors[c.b]).scale(Rational(n3 - c.n, 12));
        }
        for (const Partition& la : vectors) {
            FockVector v = p_basis(la);
            FockVector lhs = cols.apply(c.n, c.a, cols.apply(c.m, c.b, v)) -
                             cols.apply(c.m, c.b, cols.apply(c.n, c.a, v));
            FockVector rhs = cols.apply(c.n + c.m, prod, v).scaled(GradedScalar(scale)) +
                             v.scaled(central);
            if (!(lhs == rhs)) {
                std::ostringstream in;
                in << "[L_" << c.n << "(" << colors[c.a] << "), L_" << c.m << "("
                   << colors[c.b] << ")] on p" << la.str();
                return fail(in.str(), lhs.str(), rhs.str());
            }
        }
        return std::nullopt;
    });
    rep.checks += static_cast<long>(cases.size() * vectors.size());
    collect(rep, results);
    return rep;
}

Report suite_lehn(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"lehn", maxdeg, 0, {}};
    for (int n = 0; n <= maxdeg; ++n) jack_family(n);
    FockOperator cubic = lehn_cubic(maxdeg);
    std::vector<Partition> vectors = partitions_up_to(maxdeg);

    // Operator equality with e1 * box on the power-sum basis.
    auto eq_results = run_checks(vectors.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& la = vectors[idx];
        FockVector lhs = cubic.apply(p_basis(la));
        FockVector rhs = box_hamiltonian(p_basis(la)).scaled(gs_eps1());
        if (!(lhs == rhs))
            return fail("c1 cup vs e1*box on p" + la.str(), lhs.str(), rhs.str());
        return std::nullopt;
    });
    rep.checks += static_cast<long>(vectors.size());
    collect(rep, eq_results);

    // Diagonal action on the Jack basis with the geometric eigenvalue.
    auto diag_results = run_checks(vectors.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& la = vectors[idx];
        FockVector v = lift(m_to_p(jack_function(la)));
        FockVector lhs = cubic.apply(v);
        FockVector rhs = v.scaled(c1_eigenvalue(la));
        if (!(lhs == rhs))
            return fail("c1 cup on Jack " + la.str(), lhs.str(), rhs.str());
        return std::nullopt;
    });
    rep.checks += static_cast<long>(vectors.size());
    collect(rep, diag_results);

    // Commutator with single modes.
    for (int n : {-2, -1, 1, 2})
        for (const GradedScalar& alpha : {gs_one(), gs_eps2()})
            rep.merge(lehn_commutator_check(n, alpha, maxdeg));
    return rep;
}

Report suite_norm(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"norm", maxdeg, 0, {}};
    for (int n = 0; n <= maxdeg; ++n) jack_family(n);
    std::vector<Partition> vectors = partitions_up_to(maxdeg);
    auto results = run_checks(vectors.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& la = vectors[idx];
        const SymFuncR& p = jack_function(la);
        RationalFunction norm = inner_product(p, p);
        RationalFunction expected = norm_formula(la);
        if (!(norm == expected))
            return fail("<P, P> at " + la.str(), norm.str(), expected.str());
        // Box Hamiltonian eigenvalue on the same function.
        SymFuncR pp = m_to_p(p);
        SymFuncR lhs = box_hamiltonian(pp);
        SymFuncR rhs = pp.scaled(RationalFunction(jack_eigenvalue(la)));
        if (!(lhs == rhs))
            return fail("box P_" + la.str(), lhs.str(), rhs.str());
        return std::nullopt;
    });
    rep.checks += 2 * static_cast<long>(vectors.size());
    collect(rep, results);
    return rep;
}

Report suite_pieri(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"pieri", maxdeg, 0, {}};
    for (int n = 0; n <= maxdeg; ++n) jack_family(n);
    std::vector<Partition> sources = partitions_up_to(maxdeg - 1);
    SymFuncR p1 = SymFuncR::unit(Basis::power_sum, Partition{1}, RationalFunction(1));
    auto results = run_checks(sources.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& mu = sources[idx];
        SymFuncR lhs = multiply(p1, m_to_p(jack_function(mu)));
        SymFuncR rhs(Basis::power_sum);
        for (const auto& [lam, box] : add_box_targets(mu)) {
            RationalFunction c = pieri_coefficient(mu, lam);
            rhs += m_to_p(jack_function(lam)).scaled(c);
            if (!(c.eval(Rational(1)) == Rational(1)))
                return fail("pieri k=1 at mu=" + mu.str() + " lam=" + lam.str(),
                            c.eval(Rational(1)).str(), "1");
        }
        if (!(lhs == rhs))
            return fail("p_1 * P_" + mu.str(), lhs.str(), rhs.str());
        return std::nullopt;
    });
    rep.checks += 2 * static_cast<long>(sources.size());
    collect(rep, results);
    return rep;
}

Report suite_localization(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"localization", maxdeg, 0, {}};
    for (int n = 0; n <= maxdeg; ++n) jack_family(n);
    std::vector<Partition> vectors = partitions_up_to(maxdeg);

    auto char_results = run_checks(vectors.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& la = vectors[idx];
        LaurentChar chi = tangent_char(la);
        if (chi.dim() != 2 * la.size())
            return fail("dim T at " + la.str(), std::to_string(chi.dim()),
                        std::to_string(2 * la.size()));
        // Symplectic symmetry: weights pair off as w and (1,1) - w.
        LaurentChar mirrored;
        for (const auto& [w, m] : chi.weights()) mirrored.add(1 - w.first, 1 - w.second, m);
        if (!(mirrored == chi))
            return fail("symplectic symmetry at " + la.str(), chi.str(), mirrored.str());
        GradedScalar e;
        try {
            e = euler_class(chi);
        } catch (const ZeroWeightError&) {
            return fail("zero weight in T at " + la.str(), chi.str(), "no trivial weight");
        }
        if (e.is_zero())
            return fail("euler(T) vanishes at " + la.str(), e.str(), "nonzero");
        // Positive-part Euler class against its closed form
        // (-1)^n e1^n prod (l + (a+1)k).
        Poly prod(1);
        for (const Box& s : boxes(la)) {
            BoxStats st = arm_leg(la, s);
            prod *= Poly{Rational(st.leg), Rational(st.arm + 1)};
        }
        if (la.size() % 2) prod = -prod;
        GradedScalar expected(RationalFunction(prod), la.size());
        GradedScalar pos = euler_pos(la);
        if (!(pos == expected))
            return fail("euler(T^{>0}) at " + la.str(), pos.str(), expected.str());
        // Norm round trip through the pushed-forward pairing.
        SymFuncG unit = SymFuncG::unit(Basis::fixed_point, la,
                                       gs_one() / euler_nonpos(la));
        GradedScalar round = localized_pairing(unit, unit);
        GradedScalar norm(norm_formula(la));
        if (!(round == norm))
            return fail("localized norm at " + la.str(), round.str(), norm.str());
        return std::nullopt;
    });
    rep.checks += 5 * static_cast<long>(vectors.size());
    collect(rep, char_results);

    // Pushed-forward pairing equals the Fock pairing of the images.
    struct Pair { Partition la, mu; };
    std::vector<Pair> pairs;
    for (int n = 0; n <= maxdeg; ++n) {
        std::vector<Partition> grade = enumerate(n);
        for (const Partition& la : grade)
            for (const Partition& mu : grade) pairs.push_back({la, mu});
    }
    auto pair_results = run_checks(pairs.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const auto& [la, mu] = pairs[idx];
        SymFuncG vla = SymFuncG::unit(Basis::fixed_point, la, gs_one());
        SymFuncG vmu = SymFuncG::unit(Basis::fixed_point, mu, gs_one());
        GradedScalar lhs = localized_pairing(vla, vmu);
        GradedScalar rhs = fock_pairing(m_to_p(fixed_to_monomial(vla)),
                                        m_to_p(fixed_to_monomial(vmu)));
        if (!(lhs == rhs))
            return fail("pairing [I_" + la.str() + "], [I_" + mu.str() + "]",
                        lhs.str(), rhs.str());
        return std::nullopt;
    });
    rep.checks += static_cast<long>(pairs.size());
    collect(rep, pair_results);
    return rep;
}

Report suite_nested(int maxdeg, std::uint64_t /*seed*/) {
    Report rep = nested_euler_identity_check(maxdeg);
    rep.suite = "nested";
    return rep;
}

Report suite_triangularity(int maxdeg, std::uint64_t /*seed*/) {
    Report rep{"triangularity", maxdeg, 0, {}};
    for (int n = 0; n <= maxdeg; ++n) {
        jack_family(n, JackAlgorithm::gram_schmidt);
        jack_family(n, JackAlgorithm::hamiltonian);
    }
    // Jack functions stay dominance-triangular and monic in the monomial basis.
    std::vector<Partition> vectors = partitions_up_to(maxdeg);
    auto results = run_checks(vectors.size(), [&](std::size_t idx) -> std::optional<CheckFailure> {
        const Partition& la = vectors[idx];
        for (JackAlgorithm alg : {JackAlgorithm::gram_schmidt, JackAlgorithm::hamiltonian}) {
            const SymFuncR& p = jack_family(la.size(), alg).functions.at(la);
            if (!(p.coeff(la) == RationalFunction(1)))
                return fail("monic " + algorithm_name(alg) + " at " + la.str(),
                            p.coeff(la).str(), "1");
            for (const auto& [mu, c] : p.terms()) {
                DomRel rel = dominance_compare(mu, la);
                if (rel != DomRel::less && rel != DomRel::equal)
                    return fail("support " + algorithm_name(alg) + " at " + la.str(),
                                "contains " + mu.str(), "within {mu <= " + la.str() + "}");
            }
        }
        return std::nullopt;
    });
    rep.checks += 2 * static_cast<long>(vectors.size());
    collect(rep, results);
    rep.merge(triangularity_check(maxdeg));
    return rep;
}

using SuiteFn = Report (*)(int, std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"heisenberg", suite_heisenberg}, {"virasoro", suite_virasoro},
        {"lehn", suite_lehn},             {"norm", suite_norm},
        {"pieri", suite_pieri},           {"localization", suite_localization},
        {"nested", suite_nested},         {"triangularity", suite_triangularity},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> ns;
        for (const auto& [name, fn] : suite_table()) ns.push_back(name);
        ns.push_back("all");
        return ns;
    }();
    return names;
}

Report verify_suite(const std::string& name, int maxdeg, std::uint64_t seed) {
    if (name == "all") {
        Report rep{"all", maxdeg, 0, {}};
        for (const auto& [suite, fn] : suite_table()) {
            Report sub = fn(maxdeg, seed);
            for (auto& f : sub.failures) f.input = sub.suite + ": " + f.input;
            rep.merge(sub);
        }
        return rep;
    }
    for (const auto& [suite, fn] : suite_table())
        if (suite == name) return fn(maxdeg, seed);
    throw std::invalid_argument("verify_suite: unknown suite '" + name + "'");
}

}  // namespace hilb
