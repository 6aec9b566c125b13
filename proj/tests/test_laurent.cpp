#include <doctest.h>

#include "test_util.hpp"

using namespace lgp;
using lgptest::oracle_period;

static LaurentPoly cp2_potential() {
    return parse_poly("x + y + x^-1*y^-1", 2);
}

TEST_CASE("parse: documented examples") {
    LaurentPoly w = parse_poly("x1 + x2 + x1^-1*x2^-1", 2);
    CHECK(w.term_count() == 3);
    CHECK(w.coefficient({1, 0}) == 1);
    CHECK(w.coefficient({0, 1}) == 1);
    CHECK(w.coefficient({-1, -1}) == 1);

    CHECK(parse_poly("0", 3).is_zero());

    LaurentPoly p = parse_poly("2*x1^3*x2^-2 - x1", 2);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient({3, -2}) == 2);
    CHECK(p.coefficient({1, 0}) == -1);
}

TEST_CASE("parse: aliases, constants, signs") {
    CHECK(parse_poly("x + y + z", 3) == parse_poly("x1 + x2 + x3", 3));
    CHECK(parse_poly("5 + x1", 1).coefficient({0}) == 5);
    CHECK(parse_poly("-x1 + 2", 1).coefficient({1}) == -1);
    CHECK(parse_poly("3*x1*x1", 1).coefficient({2}) == 3);
    CHECK(parse_poly("x1 - x1", 1).is_zero());
    CHECK(parse_poly("x1^-0", 1) == LaurentPoly::constant(1, 1));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x1 + ", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("2x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    try {
        parse_poly("x1 + @", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("format round trip is the identity on canonical text") {
    const char* canonical[] = {
        "x1 + x2 + x1^-1*x2^-1",
        "2*x1^3*x2^-2 - x1",
        "0",
        "-3*x1 + 2",
        "x1^2 - 5",
    };
    for (const char* text : canonical) {
        int dim = infer_dim(text);
        CHECK(format_poly(parse_poly(text, dim)) == text);
    }
}

TEST_CASE("format/parse round trip on random polynomials") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 4);
        LaurentPoly w = lgptest::random_poly(rng, dim, 6, 4, 9);
        CHECK(parse_poly(format_poly(w), dim) == w);
    }
}

TEST_CASE("ring operations: documented examples") {
    LaurentPoly sq = pow(parse_poly("x1 + x2", 2), 2);
    CHECK(sq == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));

    CHECK((cp2_potential() * LaurentPoly(2)).is_zero());
    CHECK(constant_term(pow(cp2_potential(), 3)) == 6);
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 3);
        LaurentPoly a = lgptest::random_poly(rng, dim, 4, 3, 5);
        LaurentPoly b = lgptest::random_poly(rng, dim, 4, 3, 5);
        LaurentPoly c = lgptest::random_poly(rng, dim, 4, 3, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly(dim));
    }
}

TEST_CASE("constant_term examples") {
    CHECK(constant_term(parse_poly("x + y + x^-1*y^-1", 2)) == 0);
    CHECK(constant_term(parse_poly("5 + x1", 1)) == 5);
}

TEST_CASE("period: documented examples") {
    CHECK(period(cp2_potential(), 3) == 6);
    CHECK(period(cp2_potential(), 2) == 0);
    for (int d = 1; d <= 10; ++d) CHECK(period(parse_poly("x1 + x2", 2), d) == 0);

    LaurentPoly circle = parse_poly("x + x^-1", 1);
    for (int r = 1; r <= 6; ++r) {
        CHECK(period(circle, 2 * r) == binomial(2 * r, r));
        CHECK(period(circle, 2 * r - 1) == 0);
    }
    CHECK(period(circle, 6) == 20);
    CHECK(period(LaurentPoly(3), 0) == 1);
    CHECK(period(LaurentPoly(3), 5) == 0);
}

TEST_CASE("period agrees with the tuple-enumeration oracle") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 2);
        LaurentPoly w = lgptest::random_poly(rng, dim, 4, 2, 4);
        for (int d = 0; d <= 5; ++d) {
            CAPTURE(format_poly(w));
            CHECK(period(w, d) == oracle_period(w, d));
        }
    }
}

TEST_CASE("period_sequence matches period degree by degree") {
    LaurentPoly w = cp2_potential();
    auto seq = period_sequence(w, 9);
    for (int d = 0; d <= 9; ++d) CHECK(seq[d] == period(w, d));
}

TEST_CASE("period_numeric: documented examples") {
    CHECK(period_numeric(cp2_potential(), 3, 64) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(period_numeric(cp2_potential(), 0, 8) == 1.0);
    CHECK(std::abs(period_numeric(parse_poly("x1 + x2", 2), 4, 32)) < 1e-9);
    CHECK_THROWS_AS(period_numeric(cp2_potential(), 3, 1), DomainError);
}

TEST_CASE("classical period series: documented examples") {
    PeriodSeries s = classical_period_series(cp2_potential(), 6);
    CHECK(s.coeffs[0] == 1);
    CHECK(s.coeffs[1] == 0);
    CHECK(s.coeffs[2] == 0);
    CHECK(s.coeffs[3] == 1);
    CHECK(s.coeffs[4] == 0);
    CHECK(s.coeffs[5] == 0);
    CHECK(s.coeffs[6] == Rat(1, 8));

    PeriodSeries zero = classical_period_series(LaurentPoly(2), 4);
    CHECK(zero.coeffs == std::vector<Rat>{1, 0, 0, 0, 0});
}

// Disjoint-variable sums multiply classical period series; equivalently
// phi_d(W1 (+) W2) = sum_{a+b=d} binom(d,a) phi_a(W1) phi_b(W2).
TEST_CASE("period series multiplicativity for disjoint variables") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly w1 = lgptest::random_poly(rng, 1, 3, 2, 3, false);
        LaurentPoly w2 = lgptest::random_poly(rng, 1, 3, 2, 3, false);
        LaurentPoly joined(2);
        for (const auto& [e, c] : w1.terms()) joined.add_term({e[0], 0}, c);
        for (const auto& [e, c] : w2.terms()) joined.add_term({0, e[0]}, c);

        const int maxd = 6;
        PeriodSeries expected =
            series_product(classical_period_series(w1, maxd), classical_period_series(w2, maxd));
        CHECK(classical_period_series(joined, maxd) == expected);

        auto phi1 = period_sequence(w1, maxd);
        auto phi2 = period_sequence(w2, maxd);
        auto phij = period_sequence(joined, maxd);
        for (int d = 0; d <= maxd; ++d) {
            Int convolution = 0;
            for (int a = 0; a <= d; ++a) convolution += binomial(d, a) * phi1[a] * phi2[d - a];
            CHECK(phij[d] == convolution);
        }
    }
}

TEST_CASE("apply_unimodular: examples and invariance") {
    UnimodularMatrix swap{{0, 1}, {1, 0}};
    LaurentPoly sym = parse_poly("x + y", 2);
    CHECK(apply_unimodular(sym, swap) == sym);

    UnimodularMatrix shear{{1, 0}, {1, 1}};
    CHECK(apply_unimodular(parse_poly("x", 2), shear) == parse_poly("x1*x2", 2));

    CHECK_THROWS_AS(apply_unimodular(sym, UnimodularMatrix{{2, 0}, {0, 1}}), MatrixError);
    CHECK_THROWS_AS(apply_unimodular(sym, UnimodularMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                    MatrixError);

    // Random words in elementary matrices, ranks 2 and 3.
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        LaurentPoly w = lgptest::random_poly(rng, n, 4, 2, 3);
        UnimodularMatrix g = identity_matrix(n);
        for (int move = 0; move < 5; ++move) {
            UnimodularMatrix e = identity_matrix(n);
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b) {
                e[a][a] = -1;
            } else {
                e[a][b] = static_cast<std::int64_t>(rng() % 5) - 2;
            }
            IntMatrix product(n, std::vector<std::int64_t>(n, 0));
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    for (int m = 0; m < n; ++m) product[r][c] += e[r][m] * g[m][c];
                }
            }
            g = product;
        }
        LaurentPoly moved = apply_unimodular(w, g);
        for (int d = 0; d <= 6; ++d) CHECK(period(moved, d) == period(w, d));
    }
}

TEST_CASE("mutate: documented examples") {
    // W = x + y + (1+x)/y, pivot y, f = 1+x  ->  x + y(1+x) + 1/y
    LaurentPoly w = parse_poly("x + y + y^-1 + x*y^-1", 2);
    MutationSpec spec(2, parse_poly("1 + x", 2));
    LaurentPoly mutated = mutate(w, spec);
    CHECK(mutated == parse_poly("x + x*y + y + y^-1", 2));
    CHECK(period(w, 2) == 2);
    CHECK(period(mutated, 2) == 2);
    CHECK(oracle_period(w, 2) == 2);
    CHECK(oracle_period(mutated, 2) == 2);

    CHECK(mutate(w, MutationSpec(2, LaurentPoly::constant(2, 1))) == w);

    LaurentPoly bad = parse_poly("x + y + x^-1*y^-1", 2);
    try {
        mutate(bad, MutationSpec(2, parse_poly("1 + x", 2)));
        CHECK(false);
    } catch (const DivisibilityError& e) {
        CHECK(e.exponent() == -1);
    }
}

TEST_CASE("mutate input validation") {
    LaurentPoly w = parse_poly("x + y", 2);
    CHECK_THROWS_AS(mutate(w, MutationSpec(3, parse_poly("1 + x", 2))), DomainError);
    CHECK_THROWS_AS(mutate(w, MutationSpec(2, parse_poly("y", 2))), DomainError);
    CHECK_THROWS_AS(mutate(w, MutationSpec(2, LaurentPoly(2))), DomainError);
}

// Generator from the mutation-invariance property: a_j free for j >= 0 and
// divisible by f^|j| for j < 0, so the mutation is defined by construction.
TEST_CASE("mutation leaves all periods unchanged") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        int pivot = 1 + static_cast<int>(rng() % n);

        LaurentPoly f(n);
        do {
            f = LaurentPoly(n);
            for (int t = 0; t < 2; ++t) {
                ExponentVector e = lgptest::random_vector(rng, n, -1, 1);
                e[pivot - 1] = 0;
                f.add_term(e, lgptest::rand_in(rng, 1, 2));
            }
        } while (f.is_zero());

        LaurentPoly w(n);
        for (std::int64_t j = -2; j <= 2; ++j) {
            LaurentPoly layer = lgptest::random_poly(rng, n, 2, 1, 2);
            LaurentPoly stripped(n);
            for (const auto& [e, c] : layer.terms()) {
                ExponentVector s = e;
                s[pivot - 1] = 0;
                stripped.add_term(s, c);
            }
            if (j < 0) stripped = stripped * pow(f, static_cast<unsigned>(-j));
            ExponentVector shift(n, 0);
            for (const auto& [e, c] : stripped.terms()) {
                shift = e;
                shift[pivot - 1] += j;
                w.add_term(shift, c);
            }
        }
        if (w.is_zero()) continue;

        LaurentPoly mutated = mutate(w, MutationSpec(pivot, f));
        auto before = period_sequence(w, 8);
        auto after = period_sequence(mutated, 8);
        CAPTURE(format_poly(w));
        CAPTURE(format_poly(f));
        CHECK(before == after);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(parse_poly("x", 1) + parse_poly("x", 2), DimMismatchError);
    CHECK_THROWS_AS(parse_poly("x", 1) * parse_poly("x", 2), DimMismatchError);
}
