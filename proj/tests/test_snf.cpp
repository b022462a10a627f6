#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "relrips/snf.hpp"
#include "support/rational_rank.hpp"

using namespace relrips;
using namespace relrips::testing;

namespace {

IMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("diag(2,3) has Smith form (1,6)") {
    IMatrix A = from_rows({{2, 0}, {0, 3}});
    SNFResult snf = smith_normal_form(A);
    REQUIRE(snf.diagonal.size() == 2);
    CHECK(snf.diagonal[0] == 1);
    CHECK(snf.diagonal[1] == 6);
    CHECK(verify_snf(A, snf));
}

TEST_CASE("zero matrix has an all-zero diagonal") {
    IMatrix A(3, 4);
    SNFResult snf = smith_normal_form(A);
    for (const Int& d : snf.diagonal) CHECK(d == 0);
    CHECK(snf.rank() == 0);
    CHECK(verify_snf(A, snf));
}

TEST_CASE("identity is its own Smith form") {
    IMatrix A = IMatrix::identity(3);
    SNFResult snf = smith_normal_form(A);
    for (const Int& d : snf.diagonal) CHECK(d == 1);
    CHECK(verify_snf(A, snf));
}

TEST_CASE("empty dimensions are handled") {
    IMatrix A(0, 3);
    SNFResult snf = smith_normal_form(A);
    CHECK(snf.diagonal.empty());
    CHECK(verify_snf(A, snf));
}

TEST_CASE("random matrix property suite") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    for (int trial = 0; trial < 120; ++trial) {
        IMatrix A(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) = entry(rng);
        SNFResult snf = smith_normal_form(A);
        CHECK(verify_snf(A, snf));  // includes the divisibility chain
        CHECK(snf.rank() == rational_rank(A));
    }
}

TEST_CASE("integer solve distinguishes divisible from non-divisible targets") {
    IMatrix A = from_rows({{2, 0}, {0, 4}});
    SNFResult snf = smith_normal_form(A);
    std::vector<Int> odd{3, 4};
    CHECK_FALSE(solve_integer(snf, odd).has_value());
    std::vector<Int> even{6, 8};
    auto x = solve_integer(snf, even);
    REQUIRE(x.has_value());
    CHECK(matrix_apply(A, *x) == even);
}

TEST_CASE("solve detects inconsistent systems") {
    IMatrix A = from_rows({{1, 1}, {1, 1}});
    SNFResult snf = smith_normal_form(A);
    std::vector<Int> z{1, 2};
    CHECK_FALSE(solve_integer(snf, z).has_value());
    std::vector<Int> ok{3, 3};
    auto x = solve_integer(snf, ok);
    REQUIRE(x.has_value());
    CHECK(matrix_apply(A, *x) == ok);
}

TEST_CASE("kernel basis spans the kernel and is canonical") {
    IMatrix A = from_rows({{1, 1, 1}});
    SNFResult snf = smith_normal_form(A);
    auto basis = kernel_basis(snf);
    REQUIRE(basis.size() == 2);
    for (const auto& col : basis) {
        Int sum = 0;
        for (const Int& x : col) sum += x;
        CHECK(sum == 0);
    }
    // canonical: re-running on a permuted internal path still yields the
    // Hermite-normalized basis
    auto again = kernel_basis(smith_normal_form(A));
    CHECK(basis == again);
}

TEST_CASE("solver works for wide and tall shapes") {
    IMatrix wide = from_rows({{1, 2, 3}});
    auto snf = smith_normal_form(wide);
    std::vector<Int> z{5};
    auto x = solve_integer(snf, z);
    REQUIRE(x.has_value());
    CHECK(matrix_apply(wide, *x) == z);

    IMatrix tall = from_rows({{1}, {2}});
    auto snf_t = smith_normal_form(tall);
    std::vector<Int> z2{1, 2};
    auto y = solve_integer(snf_t, z2);
    REQUIRE(y.has_value());
    CHECK(matrix_apply(tall, *y) == z2);
    std::vector<Int> bad{1, 3};
    CHECK_FALSE(solve_integer(snf_t, bad).has_value());
}
