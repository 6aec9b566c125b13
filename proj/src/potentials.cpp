#include "lgp/potentials.hpp"

#include <numeric>
#include <set>

namespace lgp {

LaurentPoly hori_vafa(const ToricRaySet& rays) {
    if (rays.dim < 1) throw DomainError("ray set dimension must be positive");
    if (rays.rays.empty()) throw DomainError("ray set is empty");

    std::set<ExponentVector> seen;
    IntMatrix as_rows;
    for (const auto& v : rays.rays) {
        if (v.size() != static_cast<std::size_t>(rays.dim)) {
            throw DimMismatchError("ray length does not match dimension");
        }
        Int g = 0;
        for (auto e : v) mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (g != 1) throw DomainError("ray is not primitive");
        if (!seen.insert(v).second) throw DomainError("duplicate ray");
        as_rows.push_back(v);
    }
    if (rank_over_q(as_rows) != rays.dim) throw DomainError("rays do not span Z^n over Q");

    LaurentPoly w(rays.dim);
    for (const auto& v : rays.rays) w.add_term(v, 1);
    return w;
}

void validate(const ProjectiveProductSpec& spec) {
    if (spec.factors.empty()) throw DomainError("product spec needs at least one factor");
    for (int k : spec.factors) {
        if (k < 1) throw DomainError("projective factor dimension must be at least 1");
    }
}

LaurentPoly product_projective_potential(const ProjectiveProductSpec& spec) {
    validate(spec);
    const int n = std::accumulate(spec.factors.begin(), spec.factors.end(), 0);
    LaurentPoly w(n);
    int offset = 0;
    for (int k : spec.factors) {
        ExponentVector inv(n, 0);
        for (int j = 0; j < k; ++j) {
            ExponentVector e(n, 0);
            e[offset + j] = 1;
            w.add_term(e, 1);
            inv[offset + j] = -1;
        }
        w.add_term(inv, 1);
        offset += k;
    }
    return w;
}

}  // namespace lgp
