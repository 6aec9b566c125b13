#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgp/laurent.hpp"
#include "lgp/numeric.hpp"
#include "lgp/string_topology.hpp"

namespace lgp {

// Gravitational-descendant symbol <x^{v_1}|...|x^{v_k}> for the torus: a
// multiset of k nonzero lattice vectors, stored sorted lexicographically.
// The zero vector is outside the domain and rejected on construction.
class DescendantSymbol {
public:
    DescendantSymbol(int n, std::vector<ExponentVector> vectors);

    int n() const { return n_; }
    int k() const { return static_cast<int>(vectors_.size()); }
    const std::vector<ExponentVector>& vectors() const { return vectors_; }

    bool operator==(const DescendantSymbol&) const = default;

private:
    int n_;
    std::vector<ExponentVector> vectors_;
};

bool is_balanced(const DescendantSymbol& s);

// Closed form: (k-2)! when the vectors sum to zero (k >= 2), else 0.
Int evaluate(const DescendantSymbol& s);

DescendantSymbol apply_gl(const DescendantSymbol& s, const UnimodularMatrix& g);

// Appends rows of zeroes.
DescendantSymbol stabilize(const DescendantSymbol& s, int extra_rows);

struct SkewData {
    ExponentVector u;
    ExtElement omega;  // pure degree 2
};

// One term Omega(u, v_i) <...|x^{v_i + u}|...> of the basic relation. The
// symbol is absent exactly when the replaced vector would be zero, which can
// only happen with a zero coefficient (skewness kills the pairing at v = -u).
struct RelationTerm {
    Int coefficient;
    std::optional<DescendantSymbol> symbol;
};

// The k terms of sum_i Omega(u, v_i) <...|x^{v_i+u}|...> = 0.
std::vector<RelationTerm> relation_terms(const DescendantSymbol& s, const SkewData& data);

enum class CertKind { Stabilize, Relation, GLChange, Reorder, Leaf };

// One entry c * e_i ^ e_j of a degree-2 form, coordinates 1-based with i < j.
struct OmegaEntry {
    int i = 0;
    int j = 0;
    Int coeff;

    bool operator==(const OmegaEntry&) const = default;
};

// Node of a derivation certificate. Every node carries the ordered vector
// tuple it evaluates; children carry exact rational edge weights, and the
// node's value is the weighted sum of its children's values (leaves are
// valued (k-2)! after matching the basis-group pattern).
struct CertNode {
    CertKind kind = CertKind::Leaf;
    int dim = 0;
    std::vector<ExponentVector> symbol;

    int stab_rows = 0;                         // Stabilize
    int pivot = -1;                            // Relation: 0-based column index
    ExponentVector u;                          // Relation
    std::vector<OmegaEntry> omega;             // Relation
    UnimodularMatrix gl;                       // GLChange
    std::vector<int> permutation;              // Reorder: child[t] = parent[perm[t]]
    std::vector<std::vector<int>> leaf_groups; // Leaf: basis columns then the sum column

    std::vector<Rat> child_weights;
    std::vector<CertNode> children;
};

struct DerivationCertificate {
    CertNode root;
};

// Terminal pattern of the reduction: after deleting all-zero rows the
// columns split into groups of distinct standard basis vectors on pairwise
// disjoint coordinate sets, each completed by minus their sum.
std::optional<std::vector<std::vector<int>>> match_cpm_pattern(
    const std::vector<ExponentVector>& columns, int dim);

// Reduces a balanced symbol to basis-group leaves by iterating: stabilise
// with a unit row at the pivot column, apply the basic relation with
// u = -e_new and Omega = dz_new ^ alpha to solve for the stabilised target,
// clear the pivot block with a unimodular shear, reorder, and advance past
// columns whose original block has been emptied.
DerivationCertificate reduce(const DescendantSymbol& s);

// Independent checker: re-validates every node (relation reconstruction,
// unimodularity, stabilisation shape, permutations, leaf pattern) and
// returns the weighted leaf value, throwing InvalidStepError on any defect.
Rat verify_certificate(const DerivationCertificate& cert);

// Multilinear expansion of <BS|...|BS> with BS represented by W: sums
// coefficient products over ordered d-tuples of monomials of W and values
// each tuple with the descendant closed form. Equals (d-2)! phi_d(W).
Int bs_power_expansion(const LaurentPoly& w, int d);

}  // namespace lgp
