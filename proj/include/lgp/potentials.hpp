#pragma once

#include <vector>

#include "lgp/laurent.hpp"

namespace lgp {

// Primitive ray set of a complete fan; rays must be pairwise distinct and
// span Z^n over Q.
struct ToricRaySet {
    int dim = 0;
    std::vector<ExponentVector> rays;
};

// Hori-Vafa potential W = sum over rays v of x^v.
LaurentPoly hori_vafa(const ToricRaySet& rays);

// Product of projective spaces CP^{k_1} x ... x CP^{k_s}.
struct ProjectiveProductSpec {
    std::vector<int> factors;
};

void validate(const ProjectiveProductSpec& spec);

// Potential of the monotone product torus: one block of variables per
// factor, W = sum_i (x_{i,1} + ... + x_{i,k_i} + prod_j x_{i,j}^{-1}).
LaurentPoly product_projective_potential(const ProjectiveProductSpec& spec);

}  // namespace lgp
