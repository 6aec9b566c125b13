#include "lgp/quantum_periods.hpp"

namespace lgp {

static PeriodSeries projective_space_series(int k, int max_degree) {
    PeriodSeries s;
    s.max_degree = max_degree;
    s.coeffs.assign(max_degree + 1, Rat(0));
    for (int r = 0; (k + 1) * r <= max_degree; ++r) {
        Rat c(1);
        c /= Rat(int_pow(factorial(r), static_cast<unsigned long>(k + 1)));
        c.canonicalize();
        s.coeffs[(k + 1) * r] = c;
    }
    return s;
}

PeriodSeries known_quantum_period(const ProjectiveProductSpec& spec, int max_degree) {
    validate(spec);
    if (max_degree < 0) throw DomainError("max_degree must be non-negative");
    PeriodSeries g = projective_space_series(spec.factors[0], max_degree);
    for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        g = series_product(g, projective_space_series(spec.factors[i], max_degree));
    }
    return g;
}

MirrorReport mirror_check(const LaurentPoly& w, const PeriodSeries& g, int max_degree) {
    if (max_degree < 0) throw DomainError("max_degree must be non-negative");
    if (g.max_degree < max_degree) {
        throw DomainError("series does not reach the requested degree");
    }
    std::vector<Int> phi = period_sequence(w, max_degree);
    MirrorReport report;
    for (int d = 0; d <= max_degree; ++d) {
        Rat rhs = Rat(factorial(d)) * g.coeffs[d];
        rhs.canonicalize();
        if (Rat(phi[d]) != rhs) {
            report.success = false;
            report.mismatch_degree = d;
            report.period_value = phi[d];
            report.expected_value = rhs;
            return report;
        }
    }
    return report;
}

Rat desc_enum_to_psi(const Rat& value, int d, PsiConversion direction) {
    if (d < 2) throw DomainError("conversion requires d >= 2");
    Rat f(factorial(d - 2));
    Rat out = direction == PsiConversion::ToEnumerative ? Rat(value * f) : Rat(value / f);
    out.canonicalize();
    return out;
}

bool normalization_consistency(int d) {
    if (d < 2) throw DomainError("normalization check requires d >= 2");
    return factorial(d) == Int(d) * Int(d - 1) * factorial(d - 2);
}

std::pair<Int, Int> stabilization_factors(int N, int d, int p) {
    if (N < 1 || d < 2) throw DomainError("need N >= 1 and d >= 2");
    const long nd = static_cast<long>(N) * d;
    if (p < 2 || p > nd) throw DomainError("need 2 <= p <= N*d");
    Int many = int_pow(Int(nd), static_cast<unsigned long>(p));
    Int single = falling_factorial(Int(nd), static_cast<unsigned long>(p));
    return {many, single};
}

bool gluing_factor_identity(int N, int d) {
    if (N < 1 || d < 2) throw DomainError("need N >= 1 and d >= 2");
    // multinomial(Nd; N,...,N) computed as a product of binomials, so the
    // check against (Nd)!/(N!)^d is not circular.
    Int multinomial = 1;
    for (int i = 1; i <= d; ++i) {
        multinomial *= binomial(static_cast<unsigned long>(i) * N, static_cast<unsigned long>(N));
    }
    Int lhs = multinomial * int_pow(factorial(N), static_cast<unsigned long>(d));
    return lhs == factorial(static_cast<unsigned long>(N) * d);
}

int dim_tangency_moduli(int d, int m) {
    if (d < 0 || m < 1) throw DomainError("need d >= 0 and m >= 1");
    return 2 * d - 2 * (m + 1);
}

int dim_descendant_moduli(int k, int m, const std::vector<int>& degs) {
    if (k < 1 || m < 1) throw DomainError("need k >= 1 and m >= 1");
    int sum = 0;
    for (int x : degs) sum += x;
    return 2 * (k - 1) - 2 * m - sum;
}

std::pair<int, int> degree_dictionary(int mu, int n) {
    return {n - mu, n - 1 - mu};
}

static int fredholm_index(int n, int d, int p, int mu_sum) {
    return (n - 3) * (2 - p) + mu_sum - (2 * n - 2) - 2 * (d - 2);
}

static void enumerate_multisets(int remaining, int max_value, std::vector<int>& current,
                                std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    int cap = current.empty() ? max_value : current.back();
    for (int v = cap; v >= 0; --v) {
        current.push_back(v);
        enumerate_multisets(remaining - 1, max_value, current, out);
        current.pop_back();
    }
}

StretchSolution stretch_solver(int n, int d) {
    if (n < 2 || d < 2) throw DomainError("need n >= 2 and d >= 2");
    std::vector<StretchSolution> solutions;
    for (int p = 1; p <= d; ++p) {
        std::vector<std::vector<int>> multisets;
        std::vector<int> scratch;
        enumerate_multisets(p, n - 1, scratch, multisets);
        for (auto& mus : multisets) {
            int sum = 0;
            for (int m : mus) sum += m;
            if (fredholm_index(n, d, p, sum) >= 0) {
                solutions.push_back({p, mus});
            }
        }
    }
    if (solutions.size() != 1) {
        throw DomainError("stretch index bookkeeping is not unique: found " +
                          std::to_string(solutions.size()) + " solutions");
    }
    const StretchSolution& s = solutions.front();
    bool expected = s.p == d;
    for (int m : s.mus) expected = expected && m == n - 1;
    if (!expected || fredholm_index(n, d, s.p, s.p * (n - 1)) != 0) {
        throw DomainError("stretch solution differs from the rigid pattern");
    }
    return s;
}

}  // namespace lgp
