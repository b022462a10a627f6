#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "relrips/errors.hpp"

namespace relrips {

// SNF intermediate entries can blow up, so matrix entries are arbitrary
// precision throughout.
using Int = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultDenseEntryCap = 4'000'000;

class IMatrix {
public:
    IMatrix() = default;
    IMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IMatrix mul(const IMatrix& other) const;
    bool is_zero() const;
    bool operator==(const IMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal with a divisibility
/// chain d1 | d2 | ..., non-negative entries, zeros trailing.
struct SNFResult {
    IMatrix U, V;
    std::vector<Int> diagonal;  // length min(rows, cols)
    std::size_t rows = 0, cols = 0;

    std::size_t rank() const {
        std::size_t r = 0;
        while (r < diagonal.size() && diagonal[r] != 0) ++r;
        return r;
    }
    std::vector<Int> torsion() const {
        std::vector<Int> t;
        for (const Int& d : diagonal)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/// Smallest-pivot elimination with Euclidean row/column steps.
SNFResult smith_normal_form(IMatrix A, std::size_t entry_cap = kDefaultDenseEntryCap);

/// Re-verify U*A*V = D by straight multiplication.
bool verify_snf(const IMatrix& A, const SNFResult& snf);

/// Some integer x with A x = z, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const SNFResult& snf_of_A, std::span<const Int> z);

/// Integral basis of ker(A): the columns of V past the rank, put into a
/// column-echelon Hermite form so the output is canonical.
std::vector<std::vector<Int>> kernel_basis(const SNFResult& snf_of_A);

/// Column-style Hermite normalization (in place) of a set of columns.
void hermite_normalize(std::vector<std::vector<Int>>& columns);

std::vector<Int> matrix_apply(const IMatrix& A, std::span<const Int> x);

}  // namespace relrips
