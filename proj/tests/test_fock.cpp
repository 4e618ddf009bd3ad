#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/fock.hpp"
#include "hilb/jack.hpp"
#include "hilb/partition.hpp"
#include "hilb/symfunc.hpp"

using namespace hilb;

TEST_CASE("vacuum and basis vectors") {
    CHECK(vacuum() == p_basis(Partition{}));
    CHECK(p_basis(Partition{2, 1}).coeff(Partition{2, 1}) == gs_one());
    CHECK(p_basis(Partition{2, 1}).basis() == Basis::power_sum);
}

TEST_CASE("single modes in the concrete model") {
    // Creation with color e2 is plain multiplication by the power sum.
    CHECK(heis_apply(HeisenbergMode(-1, gs_eps2()), vacuum()) == p_basis(Partition{1}));
    CHECK(heis_apply(HeisenbergMode(-3, gs_eps2()), p_basis(Partition{1})) ==
          p_basis(Partition{3, 1}));
    // Annihilation with color e2: P_1(e2) p_1 = k * vacuum.
    CHECK(heis_apply(HeisenbergMode(1, gs_eps2()), p_basis(Partition{1})) ==
          vacuum().scaled(GradedScalar(RationalFunction(Poly::k()))));
    // Annihilation beyond the top degree gives zero.
    CHECK(heis_apply(HeisenbergMode(4, gs_one()), p_basis(Partition{2})).is_zero());
    // P_2 on p_{2,2}: derivative counts the multiplicity.
    FockVector v = heis_apply(HeisenbergMode(2, gs_eps1()), p_basis(Partition{2, 2}));
    CHECK(v == p_basis(Partition{2}).scaled(GradedScalar(Rational(-4))));
    CHECK_THROWS_AS(HeisenbergMode(0, gs_one()), std::invalid_argument);
}

TEST_CASE("surface pairing") {
    CHECK(surface_pairing(gs_eps1(), gs_eps2()) == -gs_one());
    CHECK(surface_pairing(gs_one(), gs_eps1() * gs_eps2()) == -gs_one());
    // <1, 1> = -1/(e1 e2) lives in degree -2.
    CHECK(surface_pairing(gs_one(), gs_one()).sole_degree() == -2);
}

TEST_CASE("heisenberg commutators") {
    // [P_m(1), P_{-m}(e1 e2)] = -m id.
    for (int m : {1, 2, 3}) {
        Report rep = commutator_check(m, -m, gs_one(), gs_eps1() * gs_eps2(), 4);
        CHECK(rep.ok());
        CHECK(rep.checks > 0);
        FockVector w = p_basis(Partition{2});
        HeisenbergMode a(m, gs_one()), b(-m, gs_eps1() * gs_eps2());
        FockVector lhs = heis_apply(a, heis_apply(b, w)) - heis_apply(b, heis_apply(a, w));
        CHECK(lhs == w.scaled(GradedScalar(Rational(-m))));
    }
    // Commuting pairs.
    CHECK(commutator_check(1, 2, gs_eps1(), gs_eps2(), 4).ok());
    CHECK(commutator_check(-2, -3, gs_one(), gs_one(), 4).ok());
    CHECK(commutator_check(5, -5, gs_eps2(), gs_eps2(), 4).ok());
}

TEST_CASE("normal ordering") {
    CHECK(normal_order({1, -1}) == std::vector<int>{-1, 1});
    CHECK(normal_order({2, -1, 3, -2}) == std::vector<int>{-1, -2, 2, 3});
    CHECK(normal_order({-1, -2}) == std::vector<int>{-1, -2});
    // Reordering only matters for cancelling pairs: :P_l P_m: and P_l P_m
    // agree as operators when l + m != 0.
    FockOperator plain(std::vector<ModeComposition>{{gs_one(), {2, -1}}});
    FockOperator ordered(std::vector<ModeComposition>{{gs_one(), {-1, 2}}});
    CHECK(operators_agree(plain, ordered, 5));
}

TEST_CASE("coproduct compositions") {
    // :P_1 P_{-1}:(1) with the coproduct scale (-e1 e2) is p_1 * d/dp_1,
    // the number operator counting parts equal to 1.
    FockOperator l0 = coproduct_insert({1, -1}, gs_one(), true);
    CHECK(l0.apply(p_basis(Partition{1})) == p_basis(Partition{1}));
    CHECK(l0.apply(p_basis(Partition{3})).is_zero());
    FockVector w = l0.apply(p_basis(Partition{1, 1, 1}));
    CHECK(w == p_basis(Partition{1, 1, 1}).scaled(GradedScalar(Rational(3))));
    // A zero mode index kills the composition.
    CHECK(coproduct_insert({1, 0, -1}, gs_one(), true).apply(p_basis(Partition{2})).is_zero());
    CHECK_THROWS_AS(coproduct_insert({}, gs_one(), true), std::invalid_argument);
}

TEST_CASE("virasoro zero mode is the degree operator") {
    FockOperator l0 = virasoro(0, gs_one());
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : enumerate(n))
            CHECK(l0.apply(p_basis(la)) ==
                  p_basis(la).scaled(GradedScalar(Rational(n))));
}

TEST_CASE("virasoro bracket in small cases") {
    FockOperator l1 = virasoro(1, gs_one());
    FockOperator lm1 = virasoro(-1, gs_one());
    for (int n = 0; n <= 5; ++n)
        for (const Partition& la : enumerate(n)) {
            FockVector v = p_basis(la);
            FockVector lhs = l1.apply(lm1.apply(v)) - lm1.apply(l1.apply(v));
            // [L_1, L_-1](1 (x) 1) = 2 L_0(1): the coproduct color of the
            // product is 1 (x) 1 restricted along the diagonal, and the
            // central term vanishes for n = 1.
            FockVector rhs = virasoro(0, gs_one()).apply(v).scaled(GradedScalar(Rational(2)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("virasoro operators truncate per degree") {
    // Applying L_n to a bounded vector touches only finitely many terms, so
    // apply() must succeed for any n without external bounds.
    FockOperator l5 = virasoro(5, gs_eps2());
    CHECK(l5.apply(p_basis(Partition{2, 1})).is_zero());  // degree drops below 0
    FockOperator lm5 = virasoro(-5, gs_eps2());
    FockVector v = lm5.apply(vacuum());
    CHECK(!v.is_zero());
    for (const auto& [la, c] : v.terms()) CHECK(la.size() == 5);
}

TEST_CASE("lehn operator on small components") {
    FockOperator c1 = lehn_cubic(4);
    // Degree 0 and 1 components are killed.
    CHECK(c1.apply(vacuum()).is_zero());
    CHECK(c1.apply(p_basis(Partition{1})).is_zero());
    // The lifted Jack function P_(2) is an eigenvector with eigenvalue k e1.
    FockVector j2 = lift(m_to_p(jack_function(Partition{2})));
    CHECK(c1.apply(j2) == j2.scaled(gs_eps1().scale(RationalFunction(Poly::k()))));
}

TEST_CASE("lehn equals the scaled box hamiltonian") {
    FockOperator c1 = lehn_cubic(5);
    for (int n = 0; n <= 5; ++n)
        for (const Partition& la : enumerate(n)) {
            FockVector lhs = c1.apply(p_basis(la));
            FockVector rhs = box_hamiltonian(p_basis(la)).scaled(gs_eps1());
            CHECK(lhs == rhs);
        }
    CHECK_THROWS_AS(lehn_cubic(3).apply(p_basis(Partition{4})), std::domain_error);
}

TEST_CASE("lehn commutator with single modes") {
    for (int n : {-2, -1, 1, 2}) {
        Report rep = lehn_commutator_check(n, gs_one(), 4);
        CHECK(rep.ok());
        CHECK(rep.checks > 0);
        CHECK(lehn_commutator_check(n, gs_eps2(), 3).ok());
    }
}

TEST_CASE("pairing values and adjointness") {
    FockVector p1 = p_basis(Partition{1});
    GradedScalar k0(RationalFunction(Poly::k()));
    CHECK(fock_pairing(p1, p1) == k0);
    CHECK(fock_pairing(p1.scaled(gs_eps1()), p1) == GradedScalar(RationalFunction(Poly::k()), 1));
    CHECK(fock_pairing(p_basis(Partition{2}), p_basis(Partition{1, 1})).is_zero());
    // <P_{-m}(e2) v, w> = <v, P_m(e2) w>.
    for (int m : {1, 2})
        for (const Partition& la : enumerate(3))
            for (const Partition& mu : enumerate(3 + m)) {
                FockVector v = p_basis(la), w = p_basis(mu);
                GradedScalar lhs =
                    fock_pairing(heis_apply(HeisenbergMode(-m, gs_eps2()), v), w);
                GradedScalar rhs =
                    fock_pairing(v, heis_apply(HeisenbergMode(m, gs_eps2()), w));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("materialize and operator comparison") {
    auto cols = materialize(virasoro(0, gs_one()), 3);
    CHECK(cols.size() == enumerate(3).size());
    for (const auto& [la, col] : cols)
        CHECK(col == p_basis(la).scaled(GradedScalar(Rational(3))));
    FockOperator zero;
    CHECK(zero.apply(p_basis(Partition{2})).is_zero());
    CHECK(!operators_agree(virasoro(0, gs_one()), zero, 3));
    CHECK(operators_agree(zero, FockOperator(), 4));
}
