#include "rankone/linalg.hpp"

#include "rankone/error.hpp"

#include <algorithm>
#include <utility>

namespace rankone {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
    if (cols != 0 && rows > kMaxMatrixEntries / cols) {
        throw Error(ErrorCode::TooLarge, "matrix exceeds " + std::to_string(kMaxMatrixEntries) + " entries");
    }
}

// Row r <- row r + q * row s, on both the working matrix and U.
void add_row_multiple(IntMatrix& m, std::size_t r, std::size_t s, const mpz_class& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(s, c) != 0) m(r, c) += q * m(s, c);
    }
}

void add_col_multiple(IntMatrix& m, std::size_t c, std::size_t s, const mpz_class& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, s) != 0) m(r, c) += q * m(r, s);
    }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, mpz_class(0));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& columns) const {
    IntMatrix out(rows_, columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] >= cols_) throw Error(ErrorCode::InvalidArgument, "column out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, columns[k]);
    }
    return out;
}

std::vector<mpz_class> IntMatrix::column(std::size_t c) const {
    std::vector<mpz_class> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (v != 0) return false;
    }
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not match");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    }
    return out;
}

std::vector<mpz_class> SmithForm::diagonal() const {
    std::size_t n = std::min(S.rows(), S.cols());
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = S(i, i);
    return out;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (const auto& s : diagonal()) r += s != 0 ? 1 : 0;
    return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& a = f.S;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero magnitude in the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (a(r, c) == 0) continue;
                    if (pr == rows || abs(a(r, c)) < abs(a(pr, pc))) {
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr == rows) break;
            a.swap_rows(t, pr);
            f.U.swap_rows(t, pr);
            a.swap_cols(t, pc);
            f.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a(r, t) == 0) continue;
                mpz_class q = a(r, t) / a(t, t);
                add_row_multiple(a, r, t, -q);
                add_row_multiple(f.U, r, t, -q);
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a(t, c) == 0) continue;
                mpz_class q = a(t, c) / a(t, t);
                add_col_multiple(a, c, t, -q);
                add_col_multiple(f.V, c, t, -q);
                if (a(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block; otherwise fold an
            // offending row into row t and reduce again.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (a(r, c) % a(t, t) != 0) {
                        add_row_multiple(a, t, r, 1);
                        add_row_multiple(f.U, t, r, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c) f.U(t, c) = -f.U(t, c);
        }
    }
    return f;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m)); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, mpq_class(0));
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = m(r, c);
    }
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RowEchelon rref(RatMatrix a) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);
        mpq_class inv = 1 / a(row, c);
        for (std::size_t k = c; k < a.cols(); ++k) a(row, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0) continue;
            mpq_class q = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= q * a(row, k);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

mpq_class determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(k, p);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            mpq_class q = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
        }
    }
    return det;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RatVector x(m.cols(), mpq_class(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::vector<RatVector> rational_kernel_basis(const IntMatrix& m) {
    auto e = rref(RatMatrix(m));
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols(), mpq_class(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);

        mpz_class den = 1, num = 0;
        for (const auto& x : v) {
            if (x == 0) continue;
            den = lcm(den, x.get_den());
        }
        for (auto& x : v) {
            x *= den;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
        }
        int lead = 0;
        for (const auto& x : v) {
            if (x != 0) {
                lead = sgn(x);
                break;
            }
        }
        for (auto& x : v) {
            x /= num;
            if (lead < 0) x = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector RationalSpan::reduce(RatVector v) const {
    if (v.size() != dimension_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    for (const auto& [pivot, row] : basis_) {
        if (v[pivot] == 0) continue;
        mpq_class q = v[pivot];
        for (std::size_t k = 0; k < dimension_; ++k) {
            if (row[k] != 0) v[k] -= q * row[k];
        }
    }
    return v;
}

bool RationalSpan::add(const RatVector& v) {
    RatVector r = reduce(v);
    std::size_t pivot = 0;
    while (pivot < dimension_ && r[pivot] == 0) ++pivot;
    if (pivot == dimension_) return false;
    mpq_class inv = 1 / r[pivot];
    for (auto& x : r) x *= inv;
    // Keep the basis fully reduced so `reduce` is a single pass.
    for (auto& [p, row] : basis_) {
        if (row[pivot] == 0) continue;
        mpq_class q = row[pivot];
        for (std::size_t k = 0; k < dimension_; ++k) {
            if (r[k] != 0) row[k] -= q * r[k];
        }
    }
    basis_.emplace_back(pivot, std::move(r));
    return true;
}

bool RationalSpan::contains(const RatVector& v) const {
    for (const auto& x : reduce(v)) {
        if (x != 0) return false;
    }
    return true;
}

RatVector column_vector(const IntMatrix& m, std::size_t c) {
    RatVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    bits_.assign(rows * cols, 0);
}

F2Matrix F2Matrix::mod2(const IntMatrix& m) {
    F2Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, mpz_odd_p(m(r, c).get_mpz_t()) != 0);
    }
    return out;
}

BitVector F2Matrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    BitVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= static_cast<std::uint8_t>(bits_[r * cols_ + c] & x[c]);
        y[r] = acc;
    }
    return y;
}

std::optional<F2Solution> solve_f2(const F2Matrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<BitVector> a(rows, BitVector(cols + 1, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.get(r, c) ? 1 : 0;
        a[r][cols] = b[r] & 1;
    }

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[row], a[p]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            for (std::size_t k = c; k <= cols; ++k) a[r][k] ^= a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (a[r][cols] != 0) return std::nullopt;
    }

    F2Solution sol;
    sol.particular.assign(cols, 0);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        sol.particular[pivots[r]] = a[r][cols];
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = a[r][f];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace rankone
