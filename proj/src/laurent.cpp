#include "lgp/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <sstream>

namespace lgp {

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
    if (dim < 1) throw DomainError("polynomial dimension must be positive");
}

LaurentPoly LaurentPoly::constant(int dim, const Int& value) {
    LaurentPoly p(dim);
    p.add_term(ExponentVector(dim, 0), value);
    return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exponent, const Int& coeff) {
    LaurentPoly p(static_cast<int>(exponent.size()));
    p.add_term(exponent, coeff);
    return p;
}

Int LaurentPoly::coefficient(const ExponentVector& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& exponent, const Int& coeff) {
    if (exponent.size() != static_cast<std::size_t>(dim_)) {
        throw DimMismatchError("exponent length does not match polynomial dimension");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_dim(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim() != b.dim()) throw DimMismatchError("polynomial dimensions differ");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.dim());
    for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_dim(a, b);
    LaurentPoly r(a.dim());
    ExponentVector e(a.dim());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.dim(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly pow(const LaurentPoly& w, unsigned exponent) {
    LaurentPoly r = LaurentPoly::constant(w.dim(), 1);
    for (unsigned i = 0; i < exponent; ++i) r = r * w;
    return r;
}

Int constant_term(const LaurentPoly& w) {
    return w.coefficient(ExponentVector(w.dim(), 0));
}

namespace {

struct SupportBounds {
    std::vector<std::int64_t> lo, hi;
};

SupportBounds support_bounds(const LaurentPoly& w) {
    SupportBounds b;
    b.lo.assign(w.dim(), 0);
    b.hi.assign(w.dim(), 0);
    bool first = true;
    for (const auto& [e, c] : w.terms()) {
        for (int i = 0; i < w.dim(); ++i) {
            if (first || e[i] < b.lo[i]) b.lo[i] = e[i];
            if (first || e[i] > b.hi[i]) b.hi[i] = e[i];
        }
        first = false;
    }
    return b;
}

// Whether an exponent can still return to zero within `remaining` more
// multiplications by W, judged coordinatewise from W's Newton-polytope
// extremes. Necessary condition only, which is all pruning needs.
bool zero_reachable(const ExponentVector& e, long remaining, const SupportBounds& b) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] + remaining * b.hi[i] < 0) return false;
        if (e[i] + remaining * b.lo[i] > 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Int> period_sequence(const LaurentPoly& w, int max_degree) {
    if (max_degree < 0) throw DomainError("max_degree must be non-negative");
    std::vector<Int> phi(max_degree + 1, Int(0));
    phi[0] = 1;  // W^0 = 1
    if (w.is_zero() || max_degree == 0) return phi;

    const SupportBounds bounds = support_bounds(w);
    const ExponentVector zero(w.dim(), 0);
    LaurentPoly::TermMap partial;
    partial.emplace(zero, Int(1));

    ExponentVector e(w.dim());
    for (int step = 1; step <= max_degree; ++step) {
        const long remaining = max_degree - step;
        LaurentPoly::TermMap next;
        for (const auto& [ep, cp] : partial) {
            for (const auto& [ew, cw] : w.terms()) {
                for (int i = 0; i < w.dim(); ++i) e[i] = ep[i] + ew[i];
                if (!zero_reachable(e, remaining, bounds)) continue;
                auto [it, inserted] = next.emplace(e, cp * cw);
                if (!inserted) {
                    it->second += cp * cw;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        partial = std::move(next);
        auto it = partial.find(zero);
        if (it != partial.end()) phi[step] = it->second;
    }
    return phi;
}

Int period(const LaurentPoly& w, int d) {
    if (d < 0) throw DomainError("period degree must be non-negative");
    return period_sequence(w, d)[d];
}

double period_numeric(const LaurentPoly& w, int d, int grid) {
    if (grid < 2) throw DomainError("grid must be at least 2");
    if (d < 0) throw DomainError("period degree must be non-negative");
    if (d == 0) return 1.0;
    if (w.is_zero()) return 0.0;

    const int n = w.dim();
    std::vector<std::complex<double>> roots(grid);
    for (int r = 0; r < grid; ++r) {
        double t = 2.0 * M_PI * r / grid;
        roots[r] = {std::cos(t), std::sin(t)};
    }

    struct NumericTerm {
        double coeff;
        std::vector<std::int64_t> exp_mod;  // exponents reduced mod grid
    };
    std::vector<NumericTerm> terms;
    terms.reserve(w.term_count());
    for (const auto& [e, c] : w.terms()) {
        NumericTerm t;
        t.coeff = c.get_d();
        t.exp_mod.resize(n);
        for (int i = 0; i < n; ++i) t.exp_mod[i] = ((e[i] % grid) + grid) % grid;
        terms.push_back(std::move(t));
    }

    // Kahan accumulation over grid^n samples keeps the quadrature error well
    // under the integer spacing of the exact answer.
    double sum = 0.0, comp = 0.0;
    double count = 1.0;
    std::vector<int> k(n, 0);
    for (;;) {
        std::complex<double> value(0.0, 0.0);
        for (const auto& t : terms) {
            std::int64_t idx = 0;
            for (int i = 0; i < n; ++i) idx += t.exp_mod[i] * k[i];
            value += t.coeff * roots[idx % grid];
        }
        std::complex<double> p(1.0, 0.0);
        std::complex<double> base = value;
        for (int e = d; e > 0; e >>= 1) {
            if (e & 1) p *= base;
            base *= base;
        }
        double y = p.real() - comp;
        double t2 = sum + y;
        comp = (t2 - sum) - y;
        sum = t2;

        int axis = 0;
        while (axis < n && ++k[axis] == grid) k[axis++] = 0;
        if (axis == n) break;
    }
    for (int i = 0; i < n; ++i) count *= grid;
    double result = sum / count;
    if (!std::isfinite(result)) throw DomainError("float overflow in period_numeric");
    return result;
}

PeriodSeries classical_period_series(const LaurentPoly& w, int max_degree) {
    std::vector<Int> phi = period_sequence(w, max_degree);
    PeriodSeries s;
    s.max_degree = max_degree;
    s.coeffs.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        Rat c(phi[d]);
        c /= Rat(factorial(d));
        c.canonicalize();
        s.coeffs[d] = c;
    }
    return s;
}

PeriodSeries series_product(const PeriodSeries& a, const PeriodSeries& b) {
    PeriodSeries r;
    r.max_degree = std::min(a.max_degree, b.max_degree);
    r.coeffs.assign(r.max_degree + 1, Rat(0));
    for (int i = 0; i <= r.max_degree; ++i) {
        for (int j = 0; i + j <= r.max_degree; ++j) {
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    for (auto& c : r.coeffs) c.canonicalize();
    return r;
}

LaurentPoly apply_unimodular(const LaurentPoly& w, const UnimodularMatrix& g) {
    if (g.size() != static_cast<std::size_t>(w.dim())) {
        throw MatrixError("matrix size does not match polynomial dimension");
    }
    if (!is_unimodular(g)) throw MatrixError("matrix is not unimodular");
    LaurentPoly r(w.dim());
    for (const auto& [e, c] : w.terms()) r.add_term(apply_matrix(g, e), c);
    return r;
}

namespace {

// Graded-lex term order used for the single-divisor division: a genuine
// monomial well-order on non-negative exponents, so division terminates.
struct DegLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t(0));
        std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t(0));
        if (da != db) return da < db;
        return a < b;
    }
};

using OrderedTerms = std::map<ExponentVector, Int, DegLexLess>;

ExponentVector coordinate_minima(const LaurentPoly& p) {
    ExponentVector mins(p.dim(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < p.dim(); ++i) {
            if (first || e[i] < mins[i]) mins[i] = e[i];
        }
        first = false;
    }
    return mins;
}

// Exact division in the Laurent ring. Both operands are normalized by their
// monomial units (per-coordinate minimum exponents), reducing the question to
// divisibility in Z[x_1..x_n], which the single-divisor division algorithm
// decides. Returns nothing when g does not divide a.
std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    LaurentPoly quotient(a.dim());
    if (a.is_zero()) return quotient;

    const int n = a.dim();
    const ExponentVector amin = coordinate_minima(a);
    const ExponentVector gmin = coordinate_minima(g);

    OrderedTerms rem;
    for (const auto& [e, c] : a.terms()) {
        ExponentVector shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = e[i] - amin[i];
        rem.emplace(std::move(shifted), c);
    }
    OrderedTerms divisor;
    for (const auto& [e, c] : g.terms()) {
        ExponentVector shifted(n);
        for (int i = 0; i < n; ++i) shifted[i] = e[i] - gmin[i];
        divisor.emplace(std::move(shifted), c);
    }

    const auto& [glead, gcoeff] = *divisor.rbegin();

    while (!rem.empty()) {
        const auto& [rlead, rcoeff] = *rem.rbegin();
        ExponentVector t(n);
        for (int i = 0; i < n; ++i) {
            t[i] = rlead[i] - glead[i];
            if (t[i] < 0) return std::nullopt;
        }
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rcoeff.get_mpz_t(), gcoeff.get_mpz_t());
        if (r != 0) return std::nullopt;

        ExponentVector qexp(n);
        for (int i = 0; i < n; ++i) qexp[i] = t[i] + amin[i] - gmin[i];
        quotient.add_term(qexp, q);

        ExponentVector e(n);
        for (const auto& [ge, gc] : divisor) {
            for (int i = 0; i < n; ++i) e[i] = ge[i] + t[i];
            Int delta = -q * gc;
            auto [it, inserted] = rem.emplace(e, delta);
            if (!inserted) {
                it->second += delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient;
}

}  // namespace

LaurentPoly mutate(const LaurentPoly& w, const MutationSpec& spec) {
    const int n = w.dim();
    if (spec.pivot < 1 || spec.pivot > n) throw DomainError("pivot index out of range");
    if (spec.factor.dim() != n) throw DimMismatchError("factor dimension differs from W");
    if (spec.factor.is_zero()) throw DomainError("mutation factor must be nonzero");
    const int p = spec.pivot - 1;
    for (const auto& [e, c] : spec.factor.terms()) {
        if (e[p] != 0) throw DomainError("mutation factor depends on the pivot variable");
    }

    // Collect W = sum_j a_j(x') x_p^j with the pivot coordinate zeroed out.
    std::map<std::int64_t, LaurentPoly> layers;
    for (const auto& [e, c] : w.terms()) {
        ExponentVector stripped = e;
        std::int64_t j = stripped[p];
        stripped[p] = 0;
        auto it = layers.find(j);
        if (it == layers.end()) it = layers.emplace(j, LaurentPoly(n)).first;
        it->second.add_term(stripped, c);
    }

    LaurentPoly result(n);
    for (const auto& [j, a_j] : layers) {
        LaurentPoly transformed(n);
        if (j >= 0) {
            transformed = a_j * pow(spec.factor, static_cast<unsigned>(j));
        } else {
            auto q = laurent_divide_exact(a_j, pow(spec.factor, static_cast<unsigned>(-j)));
            if (!q) throw DivisibilityError(j);
            transformed = *q;
        }
        ExponentVector e(n);
        for (const auto& [et, ct] : transformed.terms()) {
            e = et;
            e[p] += j;
            result.add_term(e, ct);
        }
    }
    return result;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int dim) : text_(text), dim_(dim) {}

    LaurentPoly parse() {
        LaurentPoly result(dim_);
        skip_ws();
        int sign = consume_sign_run(true);
        parse_term(result, sign);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') {
                throw ParseError("expected '+' or '-' between terms", pos_);
            }
            sign = consume_sign_run(false);
            parse_term(result, sign);
            skip_ws();
        }
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // Leading sign of an expression or the separator before a term.
    int consume_sign_run(bool optional) {
        skip_ws();
        int sign = 1;
        bool seen = false;
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -sign;
            ++pos_;
            seen = true;
            skip_ws();
        }
        if (!seen && !optional) throw ParseError("expected sign", pos_);
        return sign;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (!at_digit()) throw ParseError("expected integer", pos_);
        std::string digits;
        while (at_digit()) digits.push_back(text_[pos_++]);
        (void)start;
        Int v(digits);
        return negative ? Int(-v) : v;
    }

    // var := 'x' posint | 'x' | 'y' | 'z'. Returns the 1-based index.
    int parse_var() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected variable", pos_);
        char c = text_[pos_];
        int index = 0;
        if (c == 'x') {
            ++pos_;
            if (at_digit()) {
                std::string digits;
                while (at_digit()) digits.push_back(text_[pos_++]);
                try {
                    index = std::stoi(digits);
                } catch (const std::exception&) {
                    throw ParseError("variable index too large", pos_);
                }
                if (index < 1) throw ParseError("variable index must be positive", pos_);
            } else {
                index = 1;
            }
        } else if (c == 'y') {
            ++pos_;
            index = 2;
        } else if (c == 'z') {
            ++pos_;
            index = 3;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        if (index > dim_) {
            throw ParseError("variable index " + std::to_string(index) + " exceeds dimension " +
                                 std::to_string(dim_),
                             pos_);
        }
        return index;
    }

    bool at_var() const {
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == 'x' || c == 'y' || c == 'z';
    }

    void parse_term(LaurentPoly& result, int sign) {
        skip_ws();
        Int coeff = 1;
        ExponentVector exponent(dim_, 0);
        bool have_factor = false;

        if (at_digit()) {
            coeff = parse_integer();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                parse_factor(exponent);
                have_factor = true;
            }
        } else if (at_var()) {
            parse_factor(exponent);
            have_factor = true;
        } else {
            throw ParseError("expected term", pos_);
        }

        if (have_factor) {
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                parse_factor(exponent);
                skip_ws();
            }
        }
        result.add_term(exponent, sign < 0 ? Int(-coeff) : coeff);
    }

    void parse_factor(ExponentVector& exponent) {
        skip_ws();
        int index = parse_var();
        std::int64_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            Int v = parse_integer();
            if (!v.fits_slong_p()) throw ParseError("exponent out of range", pos_);
            e = v.get_si();
        }
        exponent[index - 1] += e;
    }

    const std::string& text_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int dim) {
    return PolyParser(text, dim).parse();
}

int infer_dim(const std::string& text) {
    int max_index = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'y') {
            max_index = std::max(max_index, 2);
        } else if (c == 'z') {
            max_index = std::max(max_index, 3);
        } else if (c == 'x') {
            std::size_t j = i + 1;
            std::string digits;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                digits.push_back(text[j++]);
            }
            if (!digits.empty()) {
                try {
                    max_index = std::max(max_index, std::stoi(digits));
                } catch (const std::exception&) {
                    throw ParseError("variable index too large", i);
                }
            }
        }
    }
    return max_index;
}

std::string format_poly(const LaurentPoly& w) {
    if (w.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending lexicographic order prints x1 before x2 before inverses.
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        for (int i = 0; i < w.dim(); ++i) {
            if (e[i] == 0) continue;
            std::string f = "x" + std::to_string(i + 1);
            if (e[i] != 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

}  // namespace lgp
