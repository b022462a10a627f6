#include "relrips/snf.hpp"

#include <algorithm>

namespace relrips {

IMatrix IMatrix::identity(std::size_t n) {
    IMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMatrix IMatrix::mul(const IMatrix& other) const {
    if (cols_ != other.rows_) throw domain_error("matrix dimension mismatch");
    IMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Int& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

bool IMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

struct Eliminator {
    IMatrix& D;
    IMatrix& U;  // row transforms
    IMatrix& V;  // column transforms

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    // row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(a, j) += q * D.at(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) += q * U.at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < D.rows(); ++i) D.at(i, a) += q * D.at(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) += q * V.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    }
};

}  // namespace

SNFResult smith_normal_form(IMatrix A, std::size_t entry_cap) {
    const std::size_t m = A.rows(), n = A.cols();
    if (m * n > entry_cap)
        throw resource_limit_error("matrix too large for dense Smith reduction (" +
                                   std::to_string(m) + "x" + std::to_string(n) + ")");
    SNFResult result;
    result.rows = m;
    result.cols = n;
    result.U = IMatrix::identity(m);
    result.V = IMatrix::identity(n);
    IMatrix& D = A;
    Eliminator e{D, result.U, result.V};

    const std::size_t t_end = std::min(m, n);
    for (std::size_t t = 0; t < t_end; ++t) {
        while (true) {
            // Re-select the smallest-magnitude nonzero of the trailing block
            // as pivot after every pass; this is what keeps entry growth in
            // check, since eliminations only ever leave remainders behind.
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = D.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (best == 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                t = t_end;  // trailing block is zero, done
                break;
            }
            e.swap_rows(t, pi);
            e.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                if (q != 0) e.add_row(i, t, -q);
                if (D.at(i, t) != 0) clean = false;  // remainder < pivot remains
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                if (q != 0) e.add_col(j, t, -q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // a strictly smaller pivot now exists

            // Pivot divides its cross; fold one non-divisible trailing entry
            // into the pivot row so the next pass gcds it into the pivot.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        e.add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= t_end) break;
        if (D.at(t, t) < 0) e.negate_row(t);
    }

    result.diagonal.resize(t_end);
    for (std::size_t t = 0; t < t_end; ++t) result.diagonal[t] = D.at(t, t);
    return result;
}

bool verify_snf(const IMatrix& A, const SNFResult& snf) {
    IMatrix lhs = snf.U.mul(A).mul(snf.V);
    if (lhs.rows() != snf.rows || lhs.cols() != snf.cols) return false;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            Int want = (i == j && i < snf.diagonal.size()) ? snf.diagonal[i] : Int(0);
            if (lhs.at(i, j) != want) return false;
        }
    for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] < 0) return false;
        if (snf.diagonal[i] == 0 && snf.diagonal[i + 1] != 0) return false;
        if (snf.diagonal[i] != 0 && snf.diagonal[i + 1] % snf.diagonal[i] != 0) return false;
    }
    return true;
}

std::vector<Int> matrix_apply(const IMatrix& A, std::span<const Int> x) {
    if (x.size() != A.cols()) throw domain_error("vector length mismatch");
    std::vector<Int> out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A.at(i, j) != 0 && x[j] != 0) out[i] += A.at(i, j) * x[j];
    return out;
}

std::optional<std::vector<Int>> solve_integer(const SNFResult& snf, std::span<const Int> z) {
    if (z.size() != snf.rows) throw domain_error("right-hand side length mismatch");
    std::vector<Int> uz = matrix_apply(snf.U, z);
    std::vector<Int> y(snf.cols, 0);
    for (std::size_t i = 0; i < snf.rows; ++i) {
        if (i < snf.diagonal.size() && snf.diagonal[i] != 0) {
            if (uz[i] % snf.diagonal[i] != 0) return std::nullopt;
            y[i] = uz[i] / snf.diagonal[i];
        } else if (uz[i] != 0) {
            return std::nullopt;
        }
    }
    return matrix_apply(snf.V, y);
}

void hermite_normalize(std::vector<std::vector<Int>>& columns) {
    if (columns.empty()) return;
    const std::size_t rows = columns[0].size();
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < columns.size(); ++r) {
        // Fold all columns with a nonzero in row r into one pivot column.
        for (std::size_t c = lead + 1; c < columns.size(); ++c) {
            while (columns[c][r] != 0) {
                if (columns[lead][r] == 0) {
                    std::swap(columns[lead], columns[c]);
                    continue;
                }
                Int q = columns[c][r] / columns[lead][r];
                if (q != 0)
                    for (std::size_t i = 0; i < rows; ++i)
                        columns[c][i] -= q * columns[lead][i];
                if (columns[c][r] != 0) std::swap(columns[lead], columns[c]);
            }
        }
        if (columns[lead][r] == 0) continue;
        if (columns[lead][r] < 0)
            for (Int& x : columns[lead]) x = -x;
        // Reduce pivot-row entries of the already placed columns.
        for (std::size_t c = 0; c < lead; ++c) {
            Int q = columns[c][r] / columns[lead][r];
            if (columns[c][r] % columns[lead][r] < 0) q -= 1;  // floor division
            if (q != 0)
                for (std::size_t i = 0; i < rows; ++i) columns[c][i] -= q * columns[lead][i];
        }
        ++lead;
    }
}

std::vector<std::vector<Int>> kernel_basis(const SNFResult& snf) {
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = snf.rank(); j < snf.cols; ++j) {
        std::vector<Int> col(snf.cols);
        for (std::size_t i = 0; i < snf.cols; ++i) col[i] = snf.V.at(i, j);
        basis.push_back(std::move(col));
    }
    hermite_normalize(basis);
    return basis;
}

}  // namespace relrips
