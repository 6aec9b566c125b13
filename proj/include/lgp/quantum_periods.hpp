#pragma once

#include <utility>
#include <vector>

#include "lgp/laurent.hpp"
#include "lgp/period_series.hpp"
#include "lgp/potentials.hpp"

namespace lgp {

// Quantum period series of a product of projective spaces: for CP^k the
// series is sum_r t^{(k+1)r}/(r!)^{k+1}, and product targets multiply their
// factors' series. The coefficients are pinned by brute-force constant-term
// extraction from the mirror potentials through the d! dictionary.
PeriodSeries known_quantum_period(const ProjectiveProductSpec& spec, int max_degree);

struct MirrorReport {
    bool success = true;
    int mismatch_degree = -1;
    Int period_value;   // phi_d(W) at the first mismatch
    Rat expected_value; // d! * c_d at the first mismatch
};

// Compares phi_d(W) with d! * c_d exactly for every d <= max_degree.
MirrorReport mirror_check(const LaurentPoly& w, const PeriodSeries& g, int max_degree);

enum class PsiConversion {
    ToEnumerative,  // multiply by (d-2)!  (descendant -> bullet count)
    ToDescendant,   // divide by (d-2)!
};

Rat desc_enum_to_psi(const Rat& value, int d, PsiConversion direction);

// d! = d(d-1)(d-2)! checked exactly.
bool normalization_consistency(int d);

// ((Nd)^p, (Nd)(Nd-1)...(Nd-p+1)): degrees of the two stabilisation
// forgetful maps (p distinct divisors vs one divisor hit p times).
std::pair<Int, Int> stabilization_factors(int N, int d, int p);

// (1/(Nd)!) (1/d!) multinomial(Nd; N,...,N) (N!)^d == 1/d!, exactly.
bool gluing_factor_identity(int N, int d);

// 2d - 2(m+1).
int dim_tangency_moduli(int d, int m);

// 2(k-1) - 2m - sum(degs).
int dim_descendant_moduli(int k, int m, const std::vector<int>& degs);

// (n - mu, n - 1 - mu); the check degree always exceeds the hat degree by 1.
std::pair<int, int> degree_dictionary(int mu, int n);

struct StretchSolution {
    int p = 0;
    std::vector<int> mus;
};

// Enumerates all (p, mu_1..mu_p) with 1 <= p <= d and 0 <= mu_i <= n-1 whose
// Fredholm index (n-3)(2-p) + sum(mu) - (2n-2) - 2(d-2) is non-negative, and
// requires the unique solution p = d, all mu_i = n-1 at index exactly zero.
StretchSolution stretch_solver(int n, int d);

}  // namespace lgp
