#pragma once

#include <vector>

#include "lgp/numeric.hpp"

namespace lgp {

// Truncated power series sum_{d=0..max_degree} coeffs[d] t^d with exact
// rational coefficients. Holds both classical periods pi_W (coefficients
// phi_d/d!) and quantum periods G_X.
struct PeriodSeries {
    int max_degree = 0;
    std::vector<Rat> coeffs;  // size max_degree + 1

    bool operator==(const PeriodSeries&) const = default;
};

// Cauchy product truncated to the smaller max_degree.
PeriodSeries series_product(const PeriodSeries& a, const PeriodSeries& b);

}  // namespace lgp
