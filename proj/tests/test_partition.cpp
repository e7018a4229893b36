#include <doctest.h>

#include <random>

#include "kwm/altset.hpp"
#include "kwm/partition.hpp"

using namespace kwm;

namespace {

const QPolynomial q = QPolynomial::q();
const QPolynomial one_plus_q{1, 1};

// Every vector in [0, hi]^r.
std::vector<RootVector> grid(int r, int hi)
{
    std::vector<RootVector> out;
    std::vector<int> c(r, 0);
    for (;;) {
        out.emplace_back(c);
        int k = 0;
        while (k < r && c[k] == hi)
            c[k++] = 0;
        if (k == r)
            return out;
        ++c[k];
    }
}

}  // namespace

TEST_CASE("kostant_q examples")
{
    CHECK(kostant_q(positive_root(1, 3, 3)) == QPolynomial{0, 1, 2, 1});
    CHECK(kostant_q(positive_root(1, 3, 5)) == q * pow(one_plus_q, 2));
    CHECK(kostant_q(RootVector(4)) == QPolynomial::constant(1));
    CHECK(kostant_q(RootVector(std::vector<int>{-1, 0, 0})).is_zero());
    CHECK(kostant_q(RootVector(std::vector<int>{0, 1, 1, 0, 1, 1, 0})) == q * q * pow(one_plus_q, 2));
}

TEST_CASE("kostant at q = 1")
{
    // Multisets summing to theta in rank 3: {a123}, {a12, a3}, {a1, a23}, {a1, a2, a3}.
    const auto theta3 = highest_root(3);
    CHECK(kostant_q_oracle(theta3) == QPolynomial{0, 1, 2, 1});
    CHECK(kostant(theta3) == 4);
    CHECK(kostant(simple_root(1, 3)) == 1);
    CHECK(kostant(RootVector(std::vector<int>{-1, 0, 0})) == 0);
}

TEST_CASE("oracle examples")
{
    CHECK(kostant_q_oracle(positive_root(1, 2, 2)) == QPolynomial{0, 1, 1});
    CHECK(kostant_q_oracle(RootVector(3)) == QPolynomial::constant(1));
    CHECK(kostant_q_oracle(RootVector(std::vector<int>{2, -1})).is_zero());
    CHECK_THROWS_AS(kostant_q_oracle(RootVector(std::vector<int>{10, 11})), CapExceeded);
    CHECK_NOTHROW(kostant_q_oracle(RootVector(std::vector<int>{10, 11}), 21));
}

TEST_CASE("interval closed form")
{
    CHECK(kostant_q_interval_closed_form(2, 2, 4) == q);
    CHECK(kostant_q_interval_closed_form(3, 5, 6) == q * pow(one_plus_q, 2));
    const QPolynomial expanded{0, 1, 3, 3, 1};
    CHECK(kostant_q_oracle(highest_root(4)) == expanded);
    CHECK(kostant_q_interval_closed_form(1, 4, 4) == expanded);
    CHECK_THROWS_AS(kostant_q_interval_closed_form(3, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(kostant_q_interval_closed_form(1, 5, 4), std::out_of_range);
}

TEST_CASE("factorize_over_intervals")
{
    CHECK(factorize_over_intervals(IndexSet(7, {2, 3, 5, 6})) == q * q * pow(one_plus_q, 2));
    CHECK(factorize_over_intervals(IndexSet::full(6)) == q * pow(one_plus_q, 5));
    CHECK(factorize_over_intervals(IndexSet(3, {1})) == q);
    CHECK_THROWS_AS(factorize_over_intervals(IndexSet(3, {})), std::invalid_argument);
}

TEST_CASE("DP matches the backtracking oracle on [0,3]^r, r <= 5")
{
    for (int r = 1; r <= 5; ++r) {
        PartitionTable split(r), direct(r, PartitionTable::Strategy::direct);
        for (const auto& xi : grid(r, 3)) {
            const auto expected = kostant_q_oracle(xi);
            CHECK(split.kostant_q(xi) == expected);
            CHECK(direct.kostant_q(xi) == expected);
        }
    }
}

TEST_CASE("DP matches the oracle on random capped inputs, including negatives")
{
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> rank(1, 6);
    std::uniform_int_distribution<int> coeff(-1, 4);
    int checked = 0;
    while (checked < 500) {
        const int r = rank(rng);
        std::vector<int> c(r);
        int total = 0;
        for (auto& x : c) {
            x = coeff(rng);
            total += std::abs(x);
        }
        if (total > kDefaultOracleCap)
            continue;
        const RootVector xi(c);
        CHECK(kostant_q(xi) == kostant_q_oracle(xi));
        ++checked;
    }
}

TEST_CASE("interval closed form holds against the DP for r <= 10")
{
    for (int r = 1; r <= 10; ++r) {
        PartitionTable table(r, PartitionTable::Strategy::direct);
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j)
                CHECK(table.kostant_q(positive_root(i, j, r)) == kostant_q_interval_closed_form(i, j, r));
    }
}

TEST_CASE("factorization over runs holds against the direct DP for r <= 8")
{
    for (int r = 1; r <= 8; ++r) {
        PartitionTable direct(r, PartitionTable::Strategy::direct);
        for (const auto& set : all_nonempty_subsets(r))
            CHECK(direct.kostant_q(alpha_of_index_set(set)) == factorize_over_intervals(set));
    }
}

TEST_CASE("shift invariance of alpha_{i,j} minus simple roots")
{
    for (int r = 1; r <= 7; ++r) {
        PartitionTable direct(r, PartitionTable::Strategy::direct);
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j) {
                const int width = j - i + 1;
                for (unsigned mask = 0; mask < (1u << width); ++mask) {
                    RootVector here = positive_root(i, j, r);
                    RootVector shifted = positive_root(1, width, r);
                    for (int k = 0; k < width; ++k)
                        if (mask & (1u << k)) {
                            here -= simple_root(i + k, r);
                            shifted -= simple_root(1 + k, r);
                        }
                    CHECK(direct.kostant_q(here) == direct.kostant_q(shifted));
                }
            }
    }
}

TEST_CASE("outputs have nonnegative coefficients and zero constant term unless xi = 0")
{
    for (int r = 1; r <= 4; ++r) {
        PartitionTable table(r);
        for (const auto& xi : grid(r, 3)) {
            const auto p = table.kostant_q(xi);
            for (auto c : p.coeffs())
                CHECK(c >= 0);
            CHECK(p.coeff(0) == (xi.is_zero() ? 1 : 0));
        }
    }
}

TEST_CASE("PartitionTable bookkeeping")
{
    PartitionTable table(3);
    CHECK_THROWS_AS(table.kostant_q(RootVector(4)), std::invalid_argument);
    table.kostant_q(highest_root(3));
    table.kostant_q(highest_root(3));
    CHECK(table.invocations() == 2);
    CHECK(table.memo_size() > 0);
}
