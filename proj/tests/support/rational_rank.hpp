#pragma once

// Exact matrix rank over the rationals by plain Gaussian elimination with
// boost's rational type. Independent of the Smith normal form path.

#include <boost/multiprecision/cpp_int.hpp>

#include "relrips/snf.hpp"

namespace relrips::testing {

inline std::size_t rational_rank(const IMatrix& A) {
    using Rat = boost::multiprecision::cpp_rational;
    const std::size_t m = A.rows(), n = A.cols();
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && M[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(M[pivot], M[rank]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[rank][col];
            for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace relrips::testing
