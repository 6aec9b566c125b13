#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lgp/errors.hpp"
#include "lgp/numeric.hpp"
#include "lgp/period_series.hpp"

namespace lgp {

// Lattice point in Z^n; all vectors of one polynomial share the length n.
using ExponentVector = std::vector<std::int64_t>;

using UnimodularMatrix = IntMatrix;

// Sparse Laurent polynomial over Z with a fixed ambient variable count.
// Canonical form: term map keyed by exponent in ascending lexicographic
// order, zero coefficients pruned eagerly, so operator== is structural
// equality of values.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Int>;

    explicit LaurentPoly(int dim);
    static LaurentPoly constant(int dim, const Int& value);
    static LaurentPoly monomial(const ExponentVector& exponent, const Int& coeff);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const ExponentVector& exponent) const;

    // Accumulates into the term map, pruning a coefficient that cancels.
    void add_term(const ExponentVector& exponent, const Int& coeff);

    bool operator==(const LaurentPoly&) const = default;

private:
    int dim_;
    TermMap terms_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& w, unsigned exponent);

// Coefficient of the zero exponent vector.
Int constant_term(const LaurentPoly& w);

// phi_d(W): constant term of W^d. phi_0 = 1 for any W.
Int period(const LaurentPoly& w, int d);

// phi_0 .. phi_max_degree in one powering pass.
std::vector<Int> period_sequence(const LaurentPoly& w, int max_degree);

// Unit-torus quadrature of the Cauchy integral (1/(2 pi i)^n) \oint W^d dx/x
// on a uniform grid^n sample; exact up to float rounding once grid exceeds
// the exponent spread of W^d. Throws on non-finite results.
double period_numeric(const LaurentPoly& w, int d, int grid);

// Series sum_d phi_d(W)/d! t^d up to max_degree.
PeriodSeries classical_period_series(const LaurentPoly& w, int max_degree);

// Relabels every exponent v by g v. g must have determinant +-1.
LaurentPoly apply_unimodular(const LaurentPoly& w, const UnimodularMatrix& g);

// Wall-crossing substitution x_pivot -> x_pivot * f(other variables).
struct MutationSpec {
    int pivot = 1;       // 1-based variable index
    LaurentPoly factor;  // must not involve the pivot variable

    MutationSpec(int pivot_index, LaurentPoly f) : pivot(pivot_index), factor(std::move(f)) {}
};

// Writes W = sum_j a_j(x') x_p^j and returns sum_j a_j f^j x_p^j. Throws
// DivisibilityError(j) when f^|j| does not divide a_j in the Laurent ring.
LaurentPoly mutate(const LaurentPoly& w, const MutationSpec& spec);

// Grammar: expr := term (('+'|'-') term)*; term := int ['*' factor ('*' factor)*]
//                | factor ('*' factor)*; factor := var ['^' int]; var := 'x' posint.
// x, y, z alias x1, x2, x3; whitespace ignored; ints may be negative.
LaurentPoly parse_poly(const std::string& text, int dim);

// Largest variable index mentioned in the text (>= 1); used by the CLI when
// no explicit dimension is given.
int infer_dim(const std::string& text);

// Deterministic output reproducing the grammar; terms in descending
// lexicographic exponent order. parse(format(w), w.dim()) == w.
std::string format_poly(const LaurentPoly& w);

}  // namespace lgp
