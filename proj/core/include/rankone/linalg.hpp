#pragma once

#include "rankone/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rankone {

/// Matrices beyond this many entries are refused with Error(TooLarge).
inline constexpr std::size_t kMaxMatrixEntries = 10000;

using RatVector = std::vector<mpq_class>;
using BitVector = std::vector<std::uint8_t>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix select_columns(const std::vector<std::size_t>& columns) const;
    std::vector<mpz_class> column(std::size_t c) const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// U * M * V = S with U, V unimodular and S in Smith normal form.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    /// The min(rows, cols) diagonal entries of S.
    std::vector<mpz_class> diagonal() const;
    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    explicit RatMatrix(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Reduced row echelon form; pivots[r] is the pivot column of row r.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Pivot columns are taken in increasing order, first nonzero row wins.
RowEchelon rref(RatMatrix m);
mpq_class determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Some x with M x = b, free variables set to zero; nullopt if inconsistent.
std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b);

/// One vector per non-pivot column (ascending), each a primitive integer
/// vector whose first nonzero coordinate is positive.
std::vector<RatVector> rational_kernel_basis(const IntMatrix& m);

/// Incrementally built rational column span, kept in echelon form.
class RationalSpan {
public:
    explicit RationalSpan(std::size_t dimension) : dimension_(dimension) {}

    /// Adds v to the spanning set; false if it was already in the span.
    bool add(const RatVector& v);
    bool contains(const RatVector& v) const;
    std::size_t rank() const noexcept { return basis_.size(); }

private:
    RatVector reduce(RatVector v) const;

    std::size_t dimension_;
    std::vector<std::pair<std::size_t, RatVector>> basis_;  // (pivot, row with pivot entry 1)
};

RatVector column_vector(const IntMatrix& m, std::size_t c);

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    /// Entry-wise parity of an integer matrix.
    static F2Matrix mod2(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

    BitVector multiply(const BitVector& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct F2Solution {
    BitVector particular;
    std::vector<BitVector> kernel;
};

std::optional<F2Solution> solve_f2(const F2Matrix& m, const BitVector& b);

}  // namespace rankone
