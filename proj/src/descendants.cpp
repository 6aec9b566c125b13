#include "lgp/descendants.hpp"

#include <algorithm>
#include <numeric>

namespace lgp {

DescendantSymbol::DescendantSymbol(int n, std::vector<ExponentVector> vectors)
    : n_(n), vectors_(std::move(vectors)) {
    if (n < 1) throw DomainError("symbol rank must be positive");
    if (vectors_.empty()) throw DomainError("symbol needs at least one vector");
    for (const auto& v : vectors_) {
        if (v.size() != static_cast<std::size_t>(n)) {
            throw DimMismatchError("vector length does not match symbol rank");
        }
        if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) {
            throw ZeroVectorError("descendant symbols do not admit the zero vector");
        }
    }
    std::sort(vectors_.begin(), vectors_.end());
}

bool is_balanced(const DescendantSymbol& s) {
    ExponentVector sum(s.n(), 0);
    for (const auto& v : s.vectors()) {
        for (int i = 0; i < s.n(); ++i) sum[i] += v[i];
    }
    return std::all_of(sum.begin(), sum.end(), [](std::int64_t x) { return x == 0; });
}

Int evaluate(const DescendantSymbol& s) {
    if (!is_balanced(s)) return 0;
    // A single nonzero vector cannot be balanced, so k >= 2 here.
    return factorial(static_cast<unsigned long>(s.k() - 2));
}

DescendantSymbol apply_gl(const DescendantSymbol& s, const UnimodularMatrix& g) {
    if (g.size() != static_cast<std::size_t>(s.n())) {
        throw MatrixError("matrix size does not match symbol rank");
    }
    if (!is_unimodular(g)) throw MatrixError("matrix is not unimodular");
    std::vector<ExponentVector> mapped;
    mapped.reserve(s.vectors().size());
    for (const auto& v : s.vectors()) mapped.push_back(apply_matrix(g, v));
    return DescendantSymbol(s.n(), std::move(mapped));
}

DescendantSymbol stabilize(const DescendantSymbol& s, int extra_rows) {
    if (extra_rows < 1) throw DomainError("stabilization needs at least one row");
    std::vector<ExponentVector> extended;
    extended.reserve(s.vectors().size());
    for (const auto& v : s.vectors()) {
        ExponentVector w = v;
        w.insert(w.end(), extra_rows, 0);
        extended.push_back(std::move(w));
    }
    return DescendantSymbol(s.n() + extra_rows, std::move(extended));
}

std::vector<RelationTerm> relation_terms(const DescendantSymbol& s, const SkewData& data) {
    if (data.u.size() != static_cast<std::size_t>(s.n())) {
        throw DimMismatchError("u length does not match symbol rank");
    }
    if (!data.omega.is_zero() && data.omega.homogeneous_degree() != 2) {
        throw DomainError("omega must be a pure degree-2 form");
    }
    std::vector<RelationTerm> terms;
    terms.reserve(s.vectors().size());
    for (std::size_t i = 0; i < s.vectors().size(); ++i) {
        RelationTerm term;
        term.coefficient = skew_pairing(data.omega, data.u, s.vectors()[i]);
        ExponentVector replaced = s.vectors()[i];
        bool zero = true;
        for (int c = 0; c < s.n(); ++c) {
            replaced[c] += data.u[c];
            zero = zero && replaced[c] == 0;
        }
        if (zero) {
            // Skewness forces Omega(u, -u) = 0, so a vanishing replacement
            // can only carry a zero coefficient; guard it anyway.
            if (term.coefficient != 0) {
                throw ZeroVectorError("relation term left the symbol domain");
            }
        } else {
            std::vector<ExponentVector> vectors = s.vectors();
            vectors[i] = std::move(replaced);
            term.symbol = DescendantSymbol(s.n(), std::move(vectors));
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

// ---------------------------------------------------------------------------
// Terminal pattern matching

std::optional<std::vector<std::vector<int>>> match_cpm_pattern(
    const std::vector<ExponentVector>& columns, int dim) {
    const int k = static_cast<int>(columns.size());
    if (k < 2) return std::nullopt;

    std::vector<bool> row_used(dim, false);
    for (const auto& col : columns) {
        for (int r = 0; r < dim; ++r) row_used[r] = row_used[r] || col[r] != 0;
    }

    // basis_of[r]: the unique column equal to e_r; sum_of[r]: the group column
    // with a -1 in row r.
    std::vector<int> basis_of(dim, -1), sum_of(dim, -1);
    std::vector<int> sum_columns;
    for (int c = 0; c < k; ++c) {
        const auto& col = columns[c];
        int plus = -1, minus_count = 0;
        bool is_basis = true, is_sum = true;
        for (int r = 0; r < dim; ++r) {
            if (col[r] == 0) continue;
            if (col[r] == 1 && plus == -1 && is_basis) {
                plus = r;
            } else {
                is_basis = false;
            }
            if (col[r] == -1) {
                ++minus_count;
            } else {
                is_sum = false;
            }
        }
        if (is_basis && plus != -1) {
            if (basis_of[plus] != -1) return std::nullopt;  // duplicate basis vector
            basis_of[plus] = c;
        } else if (is_sum && minus_count > 0) {
            for (int r = 0; r < dim; ++r) {
                if (col[r] != -1) continue;
                if (sum_of[r] != -1) return std::nullopt;  // overlapping groups
                sum_of[r] = c;
            }
            sum_columns.push_back(c);
        } else {
            return std::nullopt;
        }
    }
    for (int r = 0; r < dim; ++r) {
        if (!row_used[r]) continue;
        if (basis_of[r] == -1 || sum_of[r] == -1) return std::nullopt;
    }

    std::vector<std::vector<int>> groups;
    for (int c : sum_columns) {
        std::vector<int> group;
        for (int r = 0; r < dim; ++r) {
            if (columns[c][r] == -1) group.push_back(basis_of[r]);
        }
        group.push_back(c);
        groups.push_back(std::move(group));
    }
    return groups;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

bool original_block_zero(const ExponentVector& col, int n_orig) {
    for (int i = 0; i < n_orig; ++i) {
        if (col[i] != 0) return false;
    }
    return true;
}

Int alpha_value(const std::vector<int>& alpha, const ExponentVector& col) {
    Int v = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) v += Int(alpha[i]) * Int(col[i]);
    return v;
}

// Candidate functionals on the original coordinates: coordinate duals, then
// richer sign patterns ordered by support size when the rank is small.
std::vector<std::vector<int>> alpha_candidates(int n) {
    std::vector<std::vector<int>> out;
    for (int sign : {1, -1}) {
        for (int i = 0; i < n; ++i) {
            std::vector<int> a(n, 0);
            a[i] = sign;
            out.push_back(std::move(a));
        }
    }
    if (n <= 6) {
        std::vector<std::pair<int, std::vector<int>>> extra;
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (long code = 1; code < total; ++code) {
            std::vector<int> a(n, 0);
            long c = code;
            int support = 0;
            for (int i = 0; i < n; ++i) {
                int digit = static_cast<int>(c % 3);
                c /= 3;
                a[i] = digit == 2 ? -1 : digit;
                support += a[i] != 0;
            }
            if (support >= 2) extra.emplace_back(support, std::move(a));
        }
        std::stable_sort(extra.begin(), extra.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [support, a] : extra) out.push_back(std::move(a));
    }
    return out;
}

struct AlphaChoice {
    std::vector<int> alpha;
    Int pivot_value;
};

// Prefers alpha(pivot) = +-1 (integral weights), then the fewest branches,
// then the smallest pivot pairing. Correctness does not depend on the choice.
AlphaChoice choose_alpha(const std::vector<ExponentVector>& cols, int pivot, int n_orig) {
    AlphaChoice best;
    long best_score0 = 0;
    int best_score1 = 0;
    Int best_score2;
    bool have = false;
    for (auto& alpha : alpha_candidates(n_orig)) {
        Int pivot_value = alpha_value(alpha, cols[pivot]);
        if (pivot_value == 0) continue;
        Int mag = abs(pivot_value);
        int branches = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            if (alpha_value(alpha, cols[i]) != 0) ++branches;
        }
        long score0 = mag == 1 ? 0 : 1;
        if (!have || score0 < best_score0 ||
            (score0 == best_score0 &&
             (branches < best_score1 || (branches == best_score1 && mag < best_score2)))) {
            best = {alpha, pivot_value};
            best_score0 = score0;
            best_score1 = branches;
            best_score2 = mag;
            have = true;
        }
    }
    if (!have) throw DomainError("no functional separates the pivot column");
    return best;
}

CertNode make_leaf(std::vector<ExponentVector> cols, int dim,
                   std::vector<std::vector<int>> groups) {
    CertNode leaf;
    leaf.kind = CertKind::Leaf;
    leaf.dim = dim;
    leaf.symbol = std::move(cols);
    leaf.leaf_groups = std::move(groups);
    return leaf;
}

CertNode reduce_rec(std::vector<ExponentVector> cols, int dim, int n_orig, int scan) {
    if (auto groups = match_cpm_pattern(cols, dim)) {
        return make_leaf(std::move(cols), dim, std::move(*groups));
    }
    const int k = static_cast<int>(cols.size());
    while (scan < k && original_block_zero(cols[scan], n_orig)) ++scan;
    if (scan == k) {
        throw ReductionIncompleteError(
            "terminal matrix does not match the basis-group pattern");
    }
    const int pivot = scan;
    const int dim0 = dim + 1;

    // Stabilised symbol (zero row appended) and the relation base tuple,
    // which differs from it by a 1 in the pivot column's new row.
    std::vector<ExponentVector> stabilized = cols;
    for (auto& col : stabilized) col.push_back(0);
    std::vector<ExponentVector> base = stabilized;
    base[pivot].back() = 1;

    AlphaChoice alpha = choose_alpha(base, pivot, n_orig);

    CertNode relation;
    relation.kind = CertKind::Relation;
    relation.dim = dim0;
    relation.symbol = stabilized;
    relation.pivot = pivot;
    relation.u.assign(dim0, 0);
    relation.u.back() = -1;
    for (int i = 0; i < n_orig; ++i) {
        // dz ^ alpha = sum_j alpha_j dz ^ dx_j = sum_j (-alpha_j) e_j ^ e_dim0.
        if (alpha.alpha[i] != 0) relation.omega.push_back({i + 1, dim0, Int(-alpha.alpha[i])});
    }
    // Omega(u, w) = -alpha(w_orig); the pivot pairing is -alpha(pivot).
    const Int pivot_pairing = -alpha.pivot_value;

    // Shear clearing the pivot column down to the new basis vector.
    UnimodularMatrix shear = identity_matrix(dim0);
    for (int r = 0; r + 1 < dim0; ++r) shear[r][dim0 - 1] = -base[pivot][r];

    for (int i = 0; i < k; ++i) {
        if (i == pivot) continue;
        Int pairing = -alpha_value(alpha.alpha, base[i]);
        if (pairing == 0) continue;
        Rat weight = Rat(-pairing) / Rat(pivot_pairing);
        weight.canonicalize();

        std::vector<ExponentVector> term = base;
        term[i].back() -= 1;

        std::vector<ExponentVector> sheared;
        sheared.reserve(term.size());
        for (const auto& col : term) sheared.push_back(apply_matrix(shear, col));

        CertNode gl_node;
        gl_node.kind = CertKind::GLChange;
        gl_node.dim = dim0;
        gl_node.symbol = std::move(term);
        gl_node.gl = shear;

        if (i != pivot + 1) {
            std::vector<int> perm;
            perm.reserve(k);
            for (int t = 0; t <= pivot; ++t) perm.push_back(t);
            perm.push_back(i);
            for (int t = pivot + 1; t < k; ++t) {
                if (t != i) perm.push_back(t);
            }
            std::vector<ExponentVector> reordered;
            reordered.reserve(k);
            for (int t : perm) reordered.push_back(sheared[t]);

            CertNode reorder;
            reorder.kind = CertKind::Reorder;
            reorder.dim = dim0;
            reorder.symbol = std::move(sheared);
            reorder.permutation = std::move(perm);
            reorder.child_weights.push_back(Rat(1));
            reorder.children.push_back(reduce_rec(std::move(reordered), dim0, n_orig, pivot + 1));
            gl_node.child_weights.push_back(Rat(1));
            gl_node.children.push_back(std::move(reorder));
        } else {
            gl_node.child_weights.push_back(Rat(1));
            gl_node.children.push_back(reduce_rec(std::move(sheared), dim0, n_orig, pivot + 1));
        }
        relation.child_weights.push_back(weight);
        relation.children.push_back(std::move(gl_node));
    }

    CertNode stab;
    stab.kind = CertKind::Stabilize;
    stab.dim = dim;
    stab.symbol = std::move(cols);
    stab.stab_rows = 1;
    stab.child_weights.push_back(Rat(1));
    stab.children.push_back(std::move(relation));
    return stab;
}

}  // namespace

DerivationCertificate reduce(const DescendantSymbol& s) {
    if (!is_balanced(s)) throw NonBalancedError("cannot reduce a non-balanced symbol");
    if (s.k() < 2) throw DomainError("reduction needs at least two vectors");
    return {reduce_rec(s.vectors(), s.n(), s.n(), 0)};
}

// ---------------------------------------------------------------------------
// Verification

namespace {

Int omega_pairing(const std::vector<OmegaEntry>& omega, const ExponentVector& a,
                  const ExponentVector& b) {
    Int total = 0;
    for (const auto& entry : omega) {
        total += entry.coeff *
                 (Int(a[entry.i - 1]) * Int(b[entry.j - 1]) - Int(a[entry.j - 1]) * Int(b[entry.i - 1]));
    }
    return total;
}

void fail(const std::string& path, const std::string& reason) {
    throw InvalidStepError(path, reason);
}

Rat verify_node(const CertNode& node, const std::string& path) {
    if (node.dim < 1) fail(path, "non-positive dimension");
    if (node.symbol.empty()) fail(path, "empty symbol");
    for (const auto& col : node.symbol) {
        if (col.size() != static_cast<std::size_t>(node.dim)) fail(path, "ragged symbol");
        if (std::all_of(col.begin(), col.end(), [](std::int64_t x) { return x == 0; })) {
            fail(path, "zero vector in symbol");
        }
    }
    if (node.children.size() != node.child_weights.size()) {
        fail(path, "children/weights length mismatch");
    }
    const int k = static_cast<int>(node.symbol.size());

    auto verify_single_child = [&](const char* what) -> const CertNode& {
        if (node.children.size() != 1) fail(path, std::string(what) + " needs exactly one child");
        if (node.child_weights[0] != 1) fail(path, std::string(what) + " child weight must be 1");
        return node.children[0];
    };

    switch (node.kind) {
        case CertKind::Leaf: {
            if (!node.children.empty()) fail(path, "leaf with children");
            if (k < 2) fail(path, "leaf with fewer than two columns");
            auto groups = match_cpm_pattern(node.symbol, node.dim);
            if (!groups) fail(path, "leaf does not match the basis-group pattern");
            if (*groups != node.leaf_groups) fail(path, "stored leaf groups are wrong");
            return Rat(factorial(static_cast<unsigned long>(k - 2)));
        }
        case CertKind::Stabilize: {
            const CertNode& child = verify_single_child("stabilize");
            if (node.stab_rows < 1) fail(path, "stabilize without rows");
            if (child.dim != node.dim + node.stab_rows) fail(path, "stabilized dimension is wrong");
            if (static_cast<int>(child.symbol.size()) != k) fail(path, "stabilize changed arity");
            for (int c = 0; c < k; ++c) {
                ExponentVector expected = node.symbol[c];
                expected.insert(expected.end(), node.stab_rows, 0);
                if (child.symbol[c] != expected) fail(path, "stabilized column mismatch");
            }
            return verify_node(child, path + ".children[0]");
        }
        case CertKind::GLChange: {
            const CertNode& child = verify_single_child("gl");
            if (child.dim != node.dim) fail(path, "gl changed dimension");
            if (node.gl.size() != static_cast<std::size_t>(node.dim)) fail(path, "gl size mismatch");
            Int det;
            try {
                det = determinant(node.gl);
            } catch (const Error&) {
                fail(path, "malformed gl matrix");
            }
            if (det != 1 && det != -1) fail(path, "gl matrix is not unimodular");
            if (static_cast<int>(child.symbol.size()) != k) fail(path, "gl changed arity");
            for (int c = 0; c < k; ++c) {
                if (child.symbol[c] != apply_matrix(node.gl, node.symbol[c])) {
                    fail(path, "gl column mismatch");
                }
            }
            return verify_node(child, path + ".children[0]");
        }
        case CertKind::Reorder: {
            const CertNode& child = verify_single_child("reorder");
            if (child.dim != node.dim) fail(path, "reorder changed dimension");
            if (static_cast<int>(node.permutation.size()) != k) fail(path, "permutation size mismatch");
            std::vector<bool> seen(k, false);
            for (int t : node.permutation) {
                if (t < 0 || t >= k || seen[t]) fail(path, "invalid permutation");
                seen[t] = true;
            }
            if (static_cast<int>(child.symbol.size()) != k) fail(path, "reorder changed arity");
            for (int t = 0; t < k; ++t) {
                if (child.symbol[t] != node.symbol[node.permutation[t]]) {
                    fail(path, "reordered column mismatch");
                }
            }
            return verify_node(child, path + ".children[0]");
        }
        case CertKind::Relation: {
            if (node.children.empty()) fail(path, "relation without children");
            if (node.pivot < 0 || node.pivot >= k) fail(path, "pivot out of range");
            if (node.u.size() != static_cast<std::size_t>(node.dim)) fail(path, "u length mismatch");
            for (const auto& entry : node.omega) {
                if (entry.i < 1 || entry.j <= entry.i || entry.j > node.dim || entry.coeff == 0) {
                    fail(path, "malformed omega entry");
                }
            }
            // Reconstruct the base tuple: the node's symbol is the pivot term
            // of the relation, i.e. base with u added to the pivot column.
            std::vector<ExponentVector> base = node.symbol;
            for (int r = 0; r < node.dim; ++r) base[node.pivot][r] -= node.u[r];

            Int pivot_pairing = omega_pairing(node.omega, node.u, base[node.pivot]);
            if (pivot_pairing == 0) fail(path, "pivot pairing vanishes");

            Rat value(0);
            std::size_t next = 0;
            for (int i = 0; i < k; ++i) {
                if (i == node.pivot) continue;
                Int pairing = omega_pairing(node.omega, node.u, base[i]);
                if (pairing == 0) continue;
                if (next >= node.children.size()) fail(path, "missing relation term");
                const CertNode& child = node.children[next];
                Rat expected_weight = Rat(-pairing) / Rat(pivot_pairing);
                expected_weight.canonicalize();
                if (node.child_weights[next] != expected_weight) fail(path, "wrong relation weight");
                if (child.dim != node.dim) fail(path, "relation child dimension mismatch");
                if (static_cast<int>(child.symbol.size()) != k) fail(path, "relation child arity");
                for (int c = 0; c < k; ++c) {
                    ExponentVector expected = base[c];
                    if (c == i) {
                        for (int r = 0; r < node.dim; ++r) expected[r] += node.u[r];
                    }
                    if (child.symbol[c] != expected) fail(path, "relation term mismatch");
                }
                value += node.child_weights[next] *
                         verify_node(child, path + ".children[" + std::to_string(next) + "]");
                ++next;
            }
            if (next != node.children.size()) fail(path, "extra relation children");
            value.canonicalize();
            return value;
        }
    }
    fail(path, "unknown node kind");
    return Rat(0);
}

}  // namespace

Rat verify_certificate(const DerivationCertificate& cert) {
    return verify_node(cert.root, "root");
}

// ---------------------------------------------------------------------------
// Borman-Sheridan power expansion

namespace {

struct TupleEnumerator {
    const std::vector<std::pair<ExponentVector, Int>>& monomials;
    int n;
    int d;
    std::vector<std::int64_t> lo{}, hi{};
    std::vector<ExponentVector> chosen{};
    Int total = 0;

    bool reachable(const ExponentVector& sum, int remaining) const {
        for (int i = 0; i < n; ++i) {
            if (sum[i] + remaining * hi[i] < 0) return false;
            if (sum[i] + remaining * lo[i] > 0) return false;
        }
        return true;
    }

    void run(ExponentVector& sum, const Int& coeff, int position) {
        if (position == d) {
            if (std::all_of(sum.begin(), sum.end(), [](std::int64_t x) { return x == 0; })) {
                DescendantSymbol tuple(n, chosen);
                total += coeff * evaluate(tuple);
            }
            return;
        }
        if (!reachable(sum, d - position)) return;
        for (const auto& [e, c] : monomials) {
            for (int i = 0; i < n; ++i) sum[i] += e[i];
            chosen.push_back(e);
            run(sum, Int(coeff * c), position + 1);
            chosen.pop_back();
            for (int i = 0; i < n; ++i) sum[i] -= e[i];
        }
    }
};

}  // namespace

Int bs_power_expansion(const LaurentPoly& w, int d) {
    if (d < 2) throw DomainError("expansion requires d >= 2");
    std::vector<std::pair<ExponentVector, Int>> monomials(w.terms().begin(), w.terms().end());
    for (const auto& [e, c] : monomials) {
        if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; })) {
            throw ZeroVectorError("potential has a zero-exponent monomial");
        }
    }
    if (monomials.empty()) return 0;

    TupleEnumerator enumerator{monomials, w.dim(), d};
    enumerator.lo.assign(w.dim(), 0);
    enumerator.hi.assign(w.dim(), 0);
    bool first = true;
    for (const auto& [e, c] : monomials) {
        for (int i = 0; i < w.dim(); ++i) {
            if (first || e[i] < enumerator.lo[i]) enumerator.lo[i] = e[i];
            if (first || e[i] > enumerator.hi[i]) enumerator.hi[i] = e[i];
        }
        first = false;
    }
    ExponentVector sum(w.dim(), 0);
    enumerator.run(sum, Int(1), 0);
    return enumerator.total;
}

}  // namespace lgp
