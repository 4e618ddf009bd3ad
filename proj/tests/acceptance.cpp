/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance gate.  Runs every acceptance criterion at its
 *        stated bounds and prints one [PASS]/[FAIL] line per criterion.
 *        Exits nonzero when any criterion fails.
 *
 * Usage: acceptance [--cli PATH]   (PATH locates the installed CLI binary
 * for the command-line criterion; that criterion fails when absent.)
 */

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hilb/fock.hpp"
#include "hilb/hilbloc.hpp"
#include "hilb/jack.hpp"
#include "hilb/partition.hpp"
#include "hilb/symfunc.hpp"
#include "hilb/verify.hpp"

using namespace hilb;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Partition> partitions_up_to(int maxdeg) {
    std::vector<Partition> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (const Partition& la : enumerate(d)) out.push_back(la);
    return out;
}

bool jack_cross_validation(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n <= 8; ++n) {
        JackFamily gs = jack_gram_schmidt(n);
        JackFamily ham = jack_hamiltonian(n);
        if (gs.order != ham.order) return false;
        for (const Partition& la : gs.order)
            if (!(gs.functions.at(la) == ham.functions.at(la))) {
                note = "mismatch at " + la.str();
                return false;
            }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << dt << "s";
    note = os.str();
    return dt < 120.0;
}

bool norm_formula_check(std::string& note) {
    for (const Partition& la : partitions_up_to(8))
        if (!(inner_product(jack_function(la), jack_function(la)) == norm_formula(la))) {
            note = "mismatch at " + la.str();
            return false;
        }
    return true;
}

bool pieri_check(std::string& note) {
    SymFuncR p1 = SymFuncR::unit(Basis::power_sum, Partition{1}, RationalFunction(1));
    for (const Partition& mu : partitions_up_to(7)) {
        SymFuncR lhs = multiply(p1, m_to_p(jack_function(mu)));
        SymFuncR rhs(Basis::power_sum);
        for (const auto& [lam, s] : add_box_targets(mu)) {
            RationalFunction c = pieri_coefficient(mu, lam);
            rhs += m_to_p(jack_function(lam)).scaled(c);
            if (!(c.eval(Rational(1)) == Rational(1))) {
                note = "k=1 coefficient != 1 at " + mu.str() + " -> " + lam.str();
                return false;
            }
        }
        if (!(lhs == rhs)) {
            note = "expansion mismatch at " + mu.str();
            return false;
        }
    }
    return true;
}

bool heisenberg_check(std::string& note) {
    const std::vector<GradedScalar> colors{gs_one(), gs_eps1(), gs_eps2(),
                                           gs_eps1() * gs_eps2()};
    long checks = 0;
    for (int i = -5; i <= 5; ++i) {
        if (i == 0) continue;
        for (int j = -5; j <= 5; ++j) {
            if (j == 0) continue;
            for (const GradedScalar& a : colors)
                for (const GradedScalar& b : colors) {
                    Report rep = commutator_check(i, j, a, b, 8);
                    checks += rep.checks;
                    if (!rep.ok()) {
                        note = rep.failures.front().input;
                        return false;
                    }
                }
        }
    }
    note = std::to_string(checks) + " checks";
    return true;
}

bool hamiltonian_eigen_check(std::string& note) {
    for (const Partition& la : partitions_up_to(8)) {
        SymFuncR p = m_to_p(jack_function(la));
        if (!(box_hamiltonian(p) == p.scaled(jack_eigenvalue(la)))) {
            note = "not an eigenvector at " + la.str();
            return false;
        }
    }
    return true;
}

bool lehn_check(std::string& note) {
    FockOperator c1 = lehn_cubic(8);
    for (const Partition& la : partitions_up_to(8)) {
        // Equality with e1 * box on the power-sum basis.
        if (!(c1.apply(p_basis(la)) == box_hamiltonian(p_basis(la)).scaled(gs_eps1()))) {
            note = "differs from e1*box at p" + la.str();
            return false;
        }
        // Diagonal action with eigenvalue -(n(la) e1 + n(la') e2).
        FockVector v = lift(m_to_p(jack_function(la)));
        GradedScalar ev = gs_eps1().scale(Rational(-n_stat(la))) +
                          gs_eps2().scale(Rational(-n_stat(la.conjugate())));
        if (!(c1.apply(v) == v.scaled(ev))) {
            note = "wrong eigenvalue at " + la.str();
            return false;
        }
    }
    for (int n : {-2, -1, 1, 2})
        for (const GradedScalar& alpha : {gs_one(), gs_eps2()}) {
            Report rep = lehn_commutator_check(n, alpha, 6);
            if (!rep.ok()) {
                note = "commutator: " + rep.failures.front().input;
                return false;
            }
        }
    return true;
}

bool virasoro_check(std::string& note) {
    Report rep = verify_suite("virasoro", 8, 0);
    if (!rep.ok()) {
        note = rep.failures.front().input;
        return false;
    }
    note = std::to_string(rep.checks) + " checks";
    return true;
}

bool localization_check(std::string& note) {
    // Pairing factors through the monomial model on grades <= 6.
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : enumerate(n))
            for (const Partition& mu : enumerate(n)) {
                SymFuncG vla = SymFuncG::unit(Basis::fixed_point, la, gs_one());
                SymFuncG vmu = SymFuncG::unit(Basis::fixed_point, mu, gs_one());
                GradedScalar direct = localized_pairing(vla, vmu);
                GradedScalar pushed = fock_pairing(m_to_p(fixed_to_monomial(vla)),
                                                   m_to_p(fixed_to_monomial(vmu)));
                if (!(direct == pushed)) {
                    note = "pairing mismatch at " + la.str() + ", " + mu.str();
                    return false;
                }
            }
    // Character shape for n <= 8.
    for (const Partition& la : partitions_up_to(8)) {
        LaurentChar chi = tangent_char(la);
        if (chi.dim() != 2 * la.size()) {
            note = "wrong dimension at " + la.str();
            return false;
        }
        try {
            (void)euler_class(chi);
        } catch (const ZeroWeightError&) {
            note = "zero weight at " + la.str();
            return false;
        }
        LaurentChar mirror;
        for (const auto& [w, m] : chi.weights()) mirror.add(1 - w.first, 1 - w.second, m);
        if (!(mirror == chi)) {
            note = "symplectic symmetry fails at " + la.str();
            return false;
        }
    }
    return true;
}

bool nested_check(std::string& note) {
    Report rep = nested_euler_identity_check(6);
    if (!rep.ok()) {
        note = rep.failures.front().input;
        return false;
    }
    note = std::to_string(rep.checks) + " cover pairs";
    return true;
}

bool triangularity_check_both(std::string& note) {
    for (int n = 0; n <= 7; ++n)
        for (JackAlgorithm alg : {JackAlgorithm::gram_schmidt, JackAlgorithm::hamiltonian})
            for (const auto& [la, p] : jack_family(n, alg).functions)
                for (const auto& [mu, c] : p.terms()) {
                    DomRel rel = dominance_compare(mu, la);
                    if (rel != DomRel::less && rel != DomRel::equal) {
                        note = algorithm_name(alg) + " support escapes at " + la.str();
                        return false;
                    }
                }
    Report rep = triangularity_check(7);
    if (!rep.ok()) {
        note = "fixed basis: " + rep.failures.front().input;
        return false;
    }
    return true;
}

bool cli_check(const std::string& cli, std::string& note) {
    if (cli.empty()) {
        note = "no --cli path given";
        return false;
    }
    std::string cmd = "'" + cli + "' verify all --max-degree 5 > /dev/null";
    auto t0 = std::chrono::steady_clock::now();
    int status = std::system(cmd.c_str());
    double dt = seconds_since(t0);
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << dt << "s";
    note = os.str();
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        note += ", nonzero exit";
        return false;
    }
    return dt < 60.0;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    bool all_ok = true;
    auto criterion = [&all_ok](int num, const std::string& name,
                               const std::function<bool(std::string&)>& fn) {
        std::string note;
        bool ok = false;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            note = e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << name;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << std::endl;
        all_ok = all_ok && ok;
    };

    criterion(1, "Jack cross-validation, n <= 8 under 2 minutes", jack_cross_validation);
    criterion(2, "norm formula, |la| <= 8", norm_formula_check);
    criterion(3, "Pieri rule, |mu| <= 7, k=1 coefficients", pieri_check);
    criterion(4, "Heisenberg relations, |i|,|j| <= 5, degrees <= 8", heisenberg_check);
    criterion(5, "Hamiltonian eigenvalues, |la| <= 8", hamiltonian_eigen_check);
    criterion(6, "Lehn operator: diagonal, e1*box, commutator", lehn_check);
    criterion(7, "Virasoro relations with central term, |n|,|m| <= 3", virasoro_check);
    criterion(8, "localization pairing <= 6 and characters <= 8", localization_check);
    criterion(9, "nested Euler identity, |la| <= 6", nested_check);
    criterion(10, "triangularity of both expansions, n <= 7", triangularity_check_both);
    criterion(11, "CLI verify all --max-degree 5 under 60s",
              [&cli](std::string& note) { return cli_check(cli, note); });

    return all_ok ? 0 : 1;
}
