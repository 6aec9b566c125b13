#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lgp/laurent.hpp"
#include "lgp/numeric.hpp"

namespace lgp {

// Element of the exterior algebra over Z^n with basis e_1..e_n. Terms are
// keyed by the bitmask of a strictly increasing index subset (bit i-1 is
// e_i), so every stored monomial is in standard ascending form and wedge
// signs reduce to merge parities.
class ExtElement {
public:
    using Mask = std::uint64_t;
    using TermMap = std::map<Mask, Int>;

    explicit ExtElement(int n);
    static ExtElement unit(int n);                // 1
    static ExtElement basis_vector(int n, int i); // e_i, 1-based
    // Wedge of basis vectors in the listed order; repeated indices give 0.
    static ExtElement from_indices(int n, const std::vector<int>& indices, const Int& coeff);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Mask subset, const Int& coeff);

    // Exterior degree when homogeneous; -1 for 0; throws otherwise.
    int homogeneous_degree() const;
    bool is_homogeneous() const;
    ExtElement degree_part(int degree) const;

    bool operator==(const ExtElement&) const = default;

private:
    int n_;
    TermMap terms_;
};

ExtElement operator+(const ExtElement& a, const ExtElement& b);
ExtElement operator-(const ExtElement& a, const ExtElement& b);
ExtElement operator-(const ExtElement& a);
ExtElement operator*(const Int& c, const ExtElement& a);

// Graded-commutative exterior product.
ExtElement wedge(const ExtElement& a, const ExtElement& b);

// Contraction by u as a left antiderivation:
// iota_u(e_{i1} ^ ... ^ e_{ip}) = sum_j (-1)^{j-1} u^{i_j} e_{...without i_j...}.
ExtElement interior_product(const ExponentVector& u, const ExtElement& a);

// Pairing of a pure degree-2 element: (e_i ^ e_j)(a, b) = a^i b^j - a^j b^i.
Int skew_pairing(const ExtElement& omega, const ExponentVector& a, const ExponentVector& b);

// Class in H_*(Loop T^n) = Lambda^*(Z^n) (x) Z[x^{+-}]: a finite sum of
// homogeneous pieces a (x) x^u. The degree entering every sign rule is the
// exterior degree of a term.
class LoopClass {
public:
    using Key = std::pair<ExtElement::Mask, ExponentVector>;
    using TermMap = std::map<Key, Int>;

    explicit LoopClass(int n);
    static LoopClass from(const ExtElement& a, const ExponentVector& u);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(ExtElement::Mask subset, const ExponentVector& exponent, const Int& coeff);

    bool is_homogeneous() const;
    int homogeneous_degree() const;  // -1 for 0
    LoopClass degree_part(int degree) const;

    bool operator==(const LoopClass&) const = default;

private:
    int n_;
    TermMap terms_;
};

LoopClass operator+(const LoopClass& a, const LoopClass& b);
LoopClass operator-(const LoopClass& a, const LoopClass& b);
LoopClass operator-(const LoopClass& a);
LoopClass operator*(const Int& c, const LoopClass& a);

// Chas-Sullivan product (a (x) x^u) (b (x) x^v) = (a ^ b) (x) x^{u+v}.
LoopClass cs_product(const LoopClass& x, const LoopClass& y);

// BV operator Delta(a (x) x^u) = iota_u a (x) x^u.
LoopClass bv(const LoopClass& x);

// Bracket derived from the BV operator:
// l2(x, y) = Delta(x y) - Delta(x) y - (-1)^{|x|} x Delta(y),
// with non-homogeneous x split into exterior-degree parts for the sign.
LoopClass bracket(const LoopClass& x, const LoopClass& y);

// Goldman bracket on T^2: [u, v] = (u^1 v^2 - u^2 v^1) x^{u+v}.
LoopClass goldman_t2(const ExponentVector& u, const ExponentVector& v);

}  // namespace lgp
