#include "lgp/numeric.hpp"

#include <cstdlib>

namespace lgp {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int falling_factorial(const Int& n, unsigned long p) {
    Int r = 1;
    Int term = n;
    for (unsigned long i = 0; i < p; ++i) {
        r *= term;
        term -= 1;
    }
    return r;
}

static void require_square(const IntMatrix& m) {
    if (m.empty()) throw MatrixError("empty matrix");
    for (const auto& row : m) {
        if (row.size() != m.size()) throw MatrixError("matrix is not square");
    }
}

// Bareiss fraction-free elimination; every division below is exact.
Int determinant(const IntMatrix& m) {
    require_square(m);
    const std::size_t n = m.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int rank_over_q(const IntMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw MatrixError("ragged matrix");
    }
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    int rank = 0;
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows && pivot_col < cols; ++pivot_col) {
        std::size_t pr = r;
        while (pr < rows && a[pr][pivot_col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][pivot_col] == 0) continue;
            Int f1 = a[r][pivot_col];
            Int f2 = a[i][pivot_col];
            for (std::size_t j = pivot_col; j < cols; ++j) {
                a[i][j] = a[i][j] * f1 - a[r][j] * f2;
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

bool is_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

std::vector<std::int64_t> apply_matrix(const IntMatrix& g, const std::vector<std::int64_t>& v) {
    require_square(g);
    if (g.size() != v.size()) throw MatrixError("matrix/vector size mismatch");
    const std::size_t n = v.size();
    std::vector<std::int64_t> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < n; ++c) acc += Int(g[r][c]) * Int(v[c]);
        if (!acc.fits_slong_p()) throw MatrixError("exponent overflow applying matrix");
        out[r] = static_cast<std::int64_t>(acc.get_si());
    }
    return out;
}

IntMatrix identity_matrix(int n) {
    IntMatrix g(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}

Rat rat_from_string(const std::string& text) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
        throw DomainError("malformed rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
        throw DomainError("zero denominator in rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& value) {
    Rat q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace lgp
