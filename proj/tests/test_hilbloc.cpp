#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/fock.hpp"
#include "hilb/hilbloc.hpp"
#include "hilb/jack.hpp"
#include "hilb/partition.hpp"
#include "hilb/symfunc.hpp"

using namespace hilb;

namespace {

SymFuncG fixed_unit(const Partition& la) {
    return SymFuncG::unit(Basis::fixed_point, la, gs_one());
}

GradedScalar fock_pairing_of_images(const Partition& la, const Partition& mu) {
    return fock_pairing(m_to_p(fixed_to_monomial(fixed_unit(la))),
                        m_to_p(fixed_to_monomial(fixed_unit(mu))));
}

const RationalFunction kk{Poly::k()};

}  // namespace

TEST_CASE("laurent characters") {
    LaurentChar chi;
    CHECK(chi.dim() == 0);
    CHECK(chi.str() == "0");
    chi.add(1, 0);
    chi.add(0, 1, 2);
    chi.add(1, -1);
    CHECK(chi.dim() == 4);
    CHECK(chi.str() == "t1 + 2*t2 + t1*t2^-1");
    CHECK_THROWS_AS(chi.add(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(chi.add(1, 1, -2), std::invalid_argument);
}

TEST_CASE("tangent characters at fixed points") {
    CHECK(tangent_char(Partition{}).dim() == 0);

    LaurentChar one;
    one.add(1, 0);
    one.add(0, 1);
    CHECK(tangent_char(Partition{1}) == one);

    LaurentChar two;
    two.add(1, -1);
    two.add(0, 2);
    two.add(1, 0);
    two.add(0, 1);
    CHECK(tangent_char(Partition{2}) == two);

    for (int n = 0; n <= 8; ++n)
        for (const Partition& la : enumerate(n)) {
            LaurentChar chi = tangent_char(la);
            CHECK(chi.dim() == 2 * n);
            // Symplectic pairing of weights: w appears with (1,1) - w.
            LaurentChar mirror;
            for (const auto& [w, m] : chi.weights()) mirror.add(1 - w.first, 1 - w.second, m);
            CHECK(mirror == chi);
        }
}

TEST_CASE("euler classes") {
    CHECK(euler_class(tangent_char(Partition{1})) == gs_c2x());
    GradedScalar e2pts = euler_class(tangent_char(Partition{2}));
    CHECK(e2pts == GradedScalar(kk * kk * (RationalFunction(2) + kk * RationalFunction(2)), 4));

    LaurentChar bad;
    bad.add(0, 0);
    CHECK_THROWS_AS(euler_class(bad), ZeroWeightError);
    CHECK_THROWS_AS(euler_class(bad), std::domain_error);  // subtype

    CHECK(euler_class(LaurentChar()) == gs_one());
}

TEST_CASE("nonpositive and positive parts") {
    CHECK(euler_nonpos(Partition{1}) == gs_eps1());
    CHECK(euler_nonpos(Partition{2}) == GradedScalar(RationalFunction(1) + kk, 2));
    CHECK(euler_nonpos(Partition{1, 1}) == GradedScalar(RationalFunction(2), 2));
    CHECK(euler_pos(Partition{2}) == GradedScalar(kk * kk * RationalFunction(2), 2));
    // Factorization e(T) = e(T^{>0}) e(T^{<=0}).
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : enumerate(n))
            CHECK(euler_class(tangent_char(la)) == euler_pos(la) * euler_nonpos(la));
}

TEST_CASE("fixed basis to monomial basis") {
    // [I_2] -> e1^2 ((1+k) m_2 + 2 m_11).
    SymFuncG img = fixed_to_monomial(fixed_unit(Partition{2}));
    CHECK(img.basis() == Basis::monomial);
    CHECK(img.coeff(Partition{2}) == GradedScalar(RationalFunction(1) + kk, 2));
    CHECK(img.coeff(Partition{1, 1}) == GradedScalar(RationalFunction(2), 2));

    CHECK(fixed_to_monomial(fixed_unit(Partition{})) == SymFuncG::one(Basis::monomial));

    // Mixed grades are rejected.
    SymFuncG mixed = fixed_unit(Partition{1});
    mixed.add_term(Partition{2}, gs_one());
    CHECK_THROWS_AS(fixed_to_monomial(mixed), std::invalid_argument);
    CHECK_THROWS_AS(fixed_to_monomial(SymFuncG::one(Basis::monomial)), std::invalid_argument);
}

TEST_CASE("monomial basis to fixed basis") {
    // m_11 peels to a single fixed-point class.
    SymFuncG m11 = SymFuncG::unit(Basis::monomial, Partition{1, 1}, gs_one());
    SymFuncG back = monomial_to_fixed(m11);
    CHECK(back.basis() == Basis::fixed_point);
    CHECK(back.coeff(Partition{2}).is_zero());
    CHECK(back.coeff(Partition{1, 1}) == gs_one() / GradedScalar(RationalFunction(2), 2));

    for (int n = 0; n <= 5; ++n)
        for (const Partition& la : enumerate(n)) {
            SymFuncG unit = fixed_unit(la);
            CHECK(monomial_to_fixed(fixed_to_monomial(unit)) == unit);
            SymFuncG m = SymFuncG::unit(Basis::monomial, la, gs_one());
            CHECK(fixed_to_monomial(monomial_to_fixed(m)) == m);
        }
}

TEST_CASE("localized pairing") {
    // Norm round trip: [I_1]/e(T^{<=0}) has squared length k.
    SymFuncG v = SymFuncG::unit(Basis::fixed_point, Partition{1}, gs_one() / gs_eps1());
    CHECK(localized_pairing(v, v) == GradedScalar(kk));

    for (int n = 0; n <= 5; ++n)
        for (const Partition& la : enumerate(n)) {
            SymFuncG u = SymFuncG::unit(Basis::fixed_point, la,
                                        gs_one() / euler_nonpos(la));
            CHECK(localized_pairing(u, u) == GradedScalar(norm_formula(la)));
        }

    // Off-diagonal fixed classes are orthogonal.
    CHECK(localized_pairing(fixed_unit(Partition{2}), fixed_unit(Partition{1, 1})).is_zero());
    // Grade mismatch is rejected.
    CHECK_THROWS_AS(localized_pairing(fixed_unit(Partition{1}), fixed_unit(Partition{2})),
                    std::invalid_argument);

    // Pushing forward to the Fock pairing agrees.
    for (const Partition& la : enumerate(4))
        for (const Partition& mu : enumerate(4)) {
            GradedScalar direct = localized_pairing(fixed_unit(la), fixed_unit(mu));
            GradedScalar pushed = fock_pairing_of_images(la, mu);
            CHECK(direct == pushed);
        }
}

TEST_CASE("first chern class eigenvalues") {
    CHECK(c1_eigenvalue(Partition{}).is_zero());
    CHECK(c1_eigenvalue(Partition{2}) == GradedScalar(kk, 1));
    CHECK(c1_eigenvalue(Partition{1, 1}) == GradedScalar(RationalFunction(-1), 1));
    for (const Partition& la : enumerate(5))
        CHECK(c1_eigenvalue(la) == GradedScalar(jack_eigenvalue(la), 1));
}

TEST_CASE("nested tangent spaces") {
    LaurentChar expect;
    expect.add(1, 0);
    expect.add(0, 1, 2);
    expect.add(1, -1);
    CHECK(nested_tangent_char(Partition{1}, Partition{2}) == expect);
    CHECK(nested_tangent_char(Partition{}, Partition{1}).dim() == 2);
    CHECK_THROWS_AS(nested_tangent_char(Partition{1}, Partition{3}), std::invalid_argument);
    CHECK_THROWS_AS(nested_tangent_char(Partition{2}, Partition{1}), std::invalid_argument);

    // Both sides of the Euler identity at the frozen example [1] in [2],
    // where the row set R is empty.
    GradedScalar lhs = euler_class(nested_tangent_char(Partition{1}, Partition{2}));
    CHECK(lhs == GradedScalar(kk * kk + kk * kk * kk, 4));
    CHECK(lhs == gs_eps2() * euler_pos(Partition{1}) * euler_nonpos(Partition{2}));

    // For [1] in [1,1] the added box sits in row 1, so R = {(1,1)} and the
    // ratio of Pieri weights enters.
    GradedScalar lhs2 = euler_class(nested_tangent_char(Partition{1}, Partition{1, 1}));
    CHECK(lhs2 == GradedScalar(kk + kk * kk, 4));
    GradedScalar rhs2 = gs_eps2() * euler_pos(Partition{1}) * euler_nonpos(Partition{1, 1});
    rhs2 = rhs2.scale(pieri_b(Partition{1}, Box{1, 1}) /
                      pieri_b(Partition{1, 1}, Box{1, 1}));
    CHECK(lhs2 == rhs2);

    // Dimension is always 2|mu| + 2.
    for (const Partition& mu : enumerate(5))
        for (const auto& [lam, s] : add_box_targets(mu))
            CHECK(nested_tangent_char(mu, lam).dim() == 2 * mu.size() + 2);
}

TEST_CASE("suite helpers") {
    Report nested = nested_euler_identity_check(4);
    CHECK(nested.ok());
    CHECK(nested.checks > 0);
    Report tri = triangularity_check(5);
    CHECK(tri.ok());
    CHECK(tri.checks > 0);
}
