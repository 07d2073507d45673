#pragma once

// Dense integer matrices over arbitrary-precision integers and the few
// normal forms the simplex bridge needs.

#include "gorenstein/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gorenstein {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    std::string to_string() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `gens`: returns a lower-triangular basis (one column per rank) with
/// positive pivots and, in every pivot row, the entries left of the pivot
/// reduced into [0, pivot). `transform`, if given, receives the unimodular
/// U with gens * U = [basis | 0].
IntMatrix hermite_column_basis(const IntMatrix& gens, IntMatrix* transform = nullptr);

/// Diagonal normal form: returns D and sets `col_transform` to a unimodular
/// V such that U * a * V = D for some unimodular U, with D diagonal and
/// nonnegative. `a` must be square.
IntMatrix diagonal_form(const IntMatrix& a, IntMatrix& col_transform);

/// Fraction-free Gaussian elimination.
BigInt determinant(const IntMatrix& a);

/// Exact inverse over Q; throws std::domain_error for a singular matrix.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a);

}  // namespace gorenstein
