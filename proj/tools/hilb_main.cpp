/**
 * @file hilb_main.cpp
 * @brief Command line interface: Jack functions, verification suites, tangent
 *        space characters, and Pieri expansions, with text or JSON output.
 */

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include "hilb/hilbloc.hpp"
#include "hilb/jack.hpp"
#include "hilb/json_io.hpp"
#include "hilb/symfunc.hpp"
#include "hilb/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
    int max_degree = 8;
    std::string output = "text";
    std::uint64_t seed = 0;
};

bool as_json(const Options& opt) { return opt.output == "json"; }

void require_degree(int size, int max_degree, const std::string& what) {
    if (size > max_degree)
        throw std::invalid_argument(what + " exceeds --max-degree " +
                                    std::to_string(max_degree));
}

int run_jack(const Options& opt, const std::string& lam_str,
             const std::string& algorithm, bool integral, bool schur) {
    hilb::Partition la = hilb::Partition::parse(lam_str);
    require_degree(la.size(), opt.max_degree, "|" + la.str() + "|");
    hilb::JackAlgorithm alg = algorithm == "hamiltonian"
        ? hilb::JackAlgorithm::hamiltonian
        : hilb::JackAlgorithm::gram_schmidt;
    hilb::SymFuncR f = hilb::jack_family(la.size(), alg).functions.at(la);
    hilb::RationalFunction scale(1);
    if (integral) scale = hilb::integral_form_scalar(la);
    if (schur) {
        f = hilb::schur_specialize(la);
        if (integral) scale = hilb::RationalFunction(scale.eval(hilb::Rational(1)));
    }
    if (!scale.is_one()) f = f.scaled(scale);
    if (as_json(opt)) {
        json out = hilb::to_json(f);
        out["partition"] = hilb::to_json(la);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << f.str() << "\n";
    }
    return 0;
}

int run_verify(const Options& opt, const std::string& suite) {
    hilb::Report rep = hilb::verify_suite(suite, opt.max_degree, opt.seed);
    if (as_json(opt)) {
        std::cout << hilb::to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "suite " << rep.suite << ": " << rep.checks << " checks, "
                  << rep.failures.size() << " failures (max degree "
                  << rep.maxdeg << ")\n";
        for (const auto& f : rep.failures)
            std::cout << "  FAIL " << f.input << "\n    lhs = " << f.lhs
                      << "\n    rhs = " << f.rhs << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_tangent(const Options& opt, const std::string& lam_str,
                const std::string& nested_str) {
    hilb::Partition la = hilb::Partition::parse(lam_str);
    hilb::LaurentChar chi;
    if (nested_str.empty()) {
        chi = hilb::tangent_char(la);
    } else {
        hilb::Partition mu = hilb::Partition::parse(nested_str);
        chi = hilb::nested_tangent_char(mu, la);
    }
    hilb::GradedScalar e = hilb::euler_class(chi);
    hilb::GradedScalar e_nonpos = hilb::euler_nonpos(la);
    if (as_json(opt)) {
        json out;
        out["partition"] = hilb::to_json(la);
        if (!nested_str.empty())
            out["nested"] = hilb::to_json(hilb::Partition::parse(nested_str));
        out["character"] = hilb::to_json(chi);
        out["dim"] = chi.dim();
        out["euler"] = hilb::to_json(e);
        out["euler_nonpos"] = hilb::to_json(e_nonpos);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "character: " << chi.str() << "\n"
                  << "dim: " << chi.dim() << "\n"
                  << "euler: " << e.str() << "\n"
                  << "euler_nonpos: " << e_nonpos.str() << "\n";
    }
    return 0;
}

int run_pieri(const Options& opt, const std::string& mu_str) {
    hilb::Partition mu = hilb::Partition::parse(mu_str);
    require_degree(mu.size() + 1, opt.max_degree, "|" + mu.str() + "| + 1");
    auto targets = hilb::add_box_targets(mu);
    if (as_json(opt)) {
        json terms = json::array();
        for (const auto& [lam, box] : targets) {
            json t;
            t["partition"] = hilb::to_json(lam);
            t["coeff"] = hilb::to_json(hilb::pieri_coefficient(mu, lam));
            terms.push_back(t);
        }
        json out;
        out["mu"] = hilb::to_json(mu);
        out["terms"] = terms;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p[1] * P" << mu.str() << " =";
        bool first = true;
        for (const auto& [lam, box] : targets) {
            hilb::RationalFunction c = hilb::pieri_coefficient(mu, lam);
            std::cout << (first ? " " : " + ");
            if (!c.is_one()) {
                std::string cs = c.str();
                bool plain = cs.find_first_not_of("0123456789") == std::string::npos;
                if (!plain && !hilb::is_wrapped(cs)) cs = "(" + cs + ")";
                std::cout << cs << "*";
            }
            std::cout << "P" << lam.str();
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant calculus for Hilbert schemes of points in the plane"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--max-degree", opt.max_degree, "Degree bound for computations")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized spot checks")
        ->capture_default_str();

    auto* jack_cmd = app.add_subcommand("jack", "Print a Jack symmetric function");
    std::string jack_lam;
    std::string algorithm = "gram-schmidt";
    bool integral = false, schur = false;
    jack_cmd->add_option("partition", jack_lam, "Partition, e.g. \"[2,1]\"")->required();
    jack_cmd->add_option("--algorithm", algorithm, "Construction to use")
        ->check(CLI::IsMember({"gram-schmidt", "hamiltonian"}))
        ->capture_default_str();
    jack_cmd->add_flag("--integral", integral, "Print the integral form J instead of P");
    jack_cmd->add_flag("--schur", schur, "Specialize k = 1");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(hilb::suite_names()));

    auto* tangent_cmd = app.add_subcommand("tangent", "Print a tangent space character");
    std::string tangent_lam, nested_mu;
    tangent_cmd->add_option("partition", tangent_lam, "Fixed point partition")->required();
    tangent_cmd->add_option("--nested", nested_mu, "Smaller partition of a nested pair");

    auto* pieri_cmd = app.add_subcommand("pieri", "Expand p_1 * P_mu in the Jack basis");
    std::string pieri_mu;
    pieri_cmd->add_option("partition", pieri_mu, "Partition mu")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        hilb::global_sym_cache().raise_degree_cap(opt.max_degree);
        if (*jack_cmd) return run_jack(opt, jack_lam, algorithm, integral, schur);
        if (*verify_cmd) return run_verify(opt, suite);
        if (*tangent_cmd) return run_tangent(opt, tangent_lam, nested_mu);
        if (*pieri_cmd) return run_pieri(opt, pieri_mu);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
