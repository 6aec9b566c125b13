#include <doctest.h>

#include "lgp/quantum_periods.hpp"
#include "test_util.hpp"

using namespace lgp;

TEST_CASE("known quantum periods: CP^2 and CP^1") {
    PeriodSeries cp2 = known_quantum_period({{2}}, 6);
    CHECK(cp2.coeffs[0] == 1);
    CHECK(cp2.coeffs[1] == 0);
    CHECK(cp2.coeffs[2] == 0);
    CHECK(cp2.coeffs[3] == 1);
    CHECK(cp2.coeffs[4] == 0);
    CHECK(cp2.coeffs[5] == 0);
    CHECK(cp2.coeffs[6] == Rat(1, 8));

    PeriodSeries cp1 = known_quantum_period({{1}}, 8);
    for (int r = 0; 2 * r <= 8; ++r) {
        CHECK(cp1.coeffs[2 * r] == Rat(1, int_pow(factorial(r), 2)));
    }
    CHECK(cp1.coeffs[3] == 0);
}

TEST_CASE("known quantum periods: normalization c_0 = 1, c_1 = 0") {
    for (const ProjectiveProductSpec& spec :
         {ProjectiveProductSpec{{1}}, ProjectiveProductSpec{{3}}, ProjectiveProductSpec{{2, 1}},
          ProjectiveProductSpec{{1, 1, 1}}}) {
        PeriodSeries g = known_quantum_period(spec, 6);
        CHECK(g.coeffs[0] == 1);
        CHECK(g.coeffs[1] == 0);
    }
}

TEST_CASE("mirror_check: documented examples") {
    LaurentPoly cp2_pot = parse_poly("x + y + x^-1*y^-1", 2);
    CHECK(mirror_check(cp2_pot, known_quantum_period({{2}}, 9), 9).success);

    PeriodSeries flat;
    flat.max_degree = 9;
    flat.coeffs.assign(10, Rat(0));
    flat.coeffs[0] = 1;
    CHECK(mirror_check(parse_poly("x + y", 2), flat, 9).success);

    MirrorReport bad = mirror_check(cp2_pot, known_quantum_period({{1}}, 9), 9);
    CHECK_FALSE(bad.success);
    CHECK(bad.mismatch_degree == 2);
    CHECK(bad.period_value == 0);
    CHECK(bad.expected_value == 2);
}

TEST_CASE("mirror_check: every catalog product against its potential") {
    const ProjectiveProductSpec specs[] = {{{1}}, {{2}}, {{3}}, {{1, 1}}, {{2, 1}}};
    for (const auto& spec : specs) {
        LaurentPoly w = product_projective_potential(spec);
        CHECK(mirror_check(w, known_quantum_period(spec, 12), 12).success);
    }
}

TEST_CASE("desc_enum_to_psi conversions") {
    CHECK(desc_enum_to_psi(Rat(1), 3, PsiConversion::ToEnumerative) == 1);
    CHECK(desc_enum_to_psi(Rat(1, 8), 6, PsiConversion::ToEnumerative) == 3);
    CHECK_THROWS_AS(desc_enum_to_psi(Rat(1), 1, PsiConversion::ToEnumerative), DomainError);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Rat q(lgptest::rand_in(rng, -20, 20), lgptest::rand_in(rng, 1, 9));
        q.canonicalize();
        int d = 2 + static_cast<int>(rng() % 10);
        CHECK(desc_enum_to_psi(desc_enum_to_psi(q, d, PsiConversion::ToEnumerative), d,
                               PsiConversion::ToDescendant) == q);
    }
}

TEST_CASE("normalization consistency") {
    CHECK(normalization_consistency(2));
    CHECK(normalization_consistency(5));
    CHECK(normalization_consistency(12));
    CHECK_THROWS_AS(normalization_consistency(1), DomainError);
}

TEST_CASE("stabilization factors") {
    CHECK(stabilization_factors(1, 3, 2) == std::pair<Int, Int>{9, 6});
    CHECK(stabilization_factors(2, 2, 3) == std::pair<Int, Int>{64, 24});
    // p = Nd turns the falling factorial into (Nd)!.
    CHECK(stabilization_factors(1, 4, 4).second == factorial(4));
    CHECK_THROWS_AS(stabilization_factors(1, 3, 1), DomainError);
    CHECK_THROWS_AS(stabilization_factors(1, 3, 4), DomainError);
}

TEST_CASE("gluing factor identity") {
    CHECK(gluing_factor_identity(1, 3));
    CHECK(gluing_factor_identity(2, 4));
    CHECK(gluing_factor_identity(3, 5));
    for (int N = 1; N <= 4; ++N) {
        for (int d = 2; d <= 8; ++d) CHECK(gluing_factor_identity(N, d));
    }
}

TEST_CASE("moduli dimension formulas") {
    for (int d = 2; d <= 9; ++d) CHECK(dim_tangency_moduli(d, d - 1) == 0);
    CHECK(dim_tangency_moduli(3, 1) == 2);
    CHECK(dim_tangency_moduli(2, 2) == -2);

    for (int k = 2; k <= 9; ++k) {
        CHECK(dim_descendant_moduli(k, k - 1, std::vector<int>(k, 0)) == 0);
    }
    CHECK(dim_descendant_moduli(3, 1, {0, 0, 0}) == 2);
    CHECK(dim_descendant_moduli(2, 1, {1, 0}) == -1);
}

TEST_CASE("degree dictionary") {
    CHECK(degree_dictionary(3, 4) == std::pair<int, int>{1, 0});
    CHECK(degree_dictionary(0, 4) == std::pair<int, int>{4, 3});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int mu = static_cast<int>(rng() % 12);
        int n = static_cast<int>(rng() % 12);
        auto [check, hat] = degree_dictionary(mu, n);
        CHECK(check - hat == 1);
    }
}

TEST_CASE("stretch solver: documented cases and exhaustive uniqueness") {
    StretchSolution s = stretch_solver(2, 3);
    CHECK(s.p == 3);
    CHECK(s.mus == std::vector<int>{1, 1, 1});

    s = stretch_solver(3, 2);
    CHECK(s.p == 2);
    CHECK(s.mus == std::vector<int>{2, 2});

    s = stretch_solver(4, 5);
    CHECK(s.p == 5);
    CHECK(s.mus == std::vector<int>(5, 3));

    for (int n = 2; n <= 6; ++n) {
        for (int d = 2; d <= 8; ++d) {
            StretchSolution sol = stretch_solver(n, d);
            CHECK(sol.p == d);
            CHECK(sol.mus == std::vector<int>(d, n - 1));
        }
    }
}
