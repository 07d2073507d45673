#include "gorenstein/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gorenstein {

namespace {

// (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& a, const BigInt& b,
                     const BigInt& c, const BigInt& d) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const BigInt x = m(r, i);
        const BigInt y = m(r, j);
        m(r, i) = a * x + b * y;
        m(r, j) = c * x + d * y;
    }
}

void add_column_multiple(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += factor * m(r, source);
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += factor * m(source, c);
}

void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void negate_column(IntMatrix& m, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = -m(r, j);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r ? "; " : "";
        for (std::size_t c = 0; c < cols_; ++c) out += (c ? " " : "") + (*this)(r, c).get_str();
    }
    return out + "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

IntMatrix hermite_column_basis(const IntMatrix& gens, IntMatrix* transform) {
    IntMatrix a = gens;
    IntMatrix u = IntMatrix::identity(gens.cols());
    const std::size_t n = a.cols();
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < a.rows() && pivot < n; ++r) {
        for (std::size_t j = pivot + 1; j < n; ++j) {
            if (a(r, j) == 0) continue;
            if (a(r, pivot) == 0) {
                swap_columns(a, pivot, j);
                swap_columns(u, pivot, j);
                continue;
            }
            BigInt g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a(r, pivot).get_mpz_t(), a(r, j).get_mpz_t());
            const BigInt p = a(r, pivot) / g;
            const BigInt q = a(r, j) / g;
            combine_columns(a, pivot, j, x, y, -q, p);
            combine_columns(u, pivot, j, x, y, -q, p);
        }
        if (a(r, pivot) == 0) continue;
        if (a(r, pivot) < 0) {
            negate_column(a, pivot);
            negate_column(u, pivot);
        }
        for (std::size_t j = 0; j < pivot; ++j) {
            const BigInt f = floor_div(a(r, j), a(r, pivot));
            if (f == 0) continue;
            add_column_multiple(a, j, pivot, -f);
            add_column_multiple(u, j, pivot, -f);
        }
        ++pivot;
    }
    IntMatrix basis(a.rows(), pivot);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < pivot; ++c) basis(r, c) = a(r, c);
    }
    if (transform) *transform = std::move(u);
    return basis;
}

IntMatrix diagonal_form(const IntMatrix& input, IntMatrix& col_transform) {
    if (input.rows() != input.cols()) throw std::invalid_argument("diagonal_form: matrix must be square");
    IntMatrix a = input;
    const std::size_t n = a.rows();
    col_transform = IntMatrix::identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi == n || abs(a(i, j)) < abs(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n) return a;  // remaining block is zero
            swap_rows(a, t, pi);
            swap_columns(a, t, pj);
            swap_columns(col_transform, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                add_row_multiple(a, i, t, -floor_div(a(i, t), a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                const BigInt f = -floor_div(a(t, j), a(t, t));
                add_column_multiple(a, j, t, f);
                add_column_multiple(col_transform, j, t, f);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
        }
    }
    return a;
}

BigInt determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = input.rows();
    if (n == 0) return BigInt(1);
    IntMatrix a = input;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return BigInt(0);
            swap_rows(a, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("rational_inverse: matrix must be square");
    const std::size_t n = input.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(input(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw std::domain_error("rational_inverse: matrix is singular");
        std::swap(a[p], a[col]);
        const mpq_class inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const mpq_class f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = Rational(a[i][n + j]);
    }
    return out;
}

}  // namespace gorenstein
