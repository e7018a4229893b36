#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kwm/altset.hpp"
#include "kwm/roots.hpp"
#include "oracles.hpp"

using namespace kwm;

TEST_CASE("simple_root")
{
    CHECK(simple_root(2, 4).coeffs() == std::vector<int>{0, 1, 0, 0});
    CHECK(simple_root(1, 1).coeffs() == std::vector<int>{1});
    CHECK_THROWS_AS(simple_root(5, 4), std::out_of_range);
    CHECK_THROWS_AS(simple_root(0, 4), std::out_of_range);
}

TEST_CASE("positive_root")
{
    CHECK(positive_root(1, 4, 4).coeffs() == std::vector<int>{1, 1, 1, 1});
    CHECK(positive_root(1, 4, 4) == highest_root(4));
    CHECK(positive_root(3, 3, 5) == simple_root(3, 5));
    CHECK(positive_root(2, 3, 4).coeffs() == std::vector<int>{0, 1, 1, 0});
    CHECK_THROWS_AS(positive_root(3, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(positive_root(1, 5, 4), std::out_of_range);

    for (int r = 1; r <= 6; ++r)
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j) {
                RootVector sum(r);
                for (int k = i; k <= j; ++k)
                    sum += simple_root(k, r);
                CHECK(positive_root(i, j, r) == sum);
            }
}

TEST_CASE("all_positive_roots")
{
    const auto two = all_positive_roots(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == simple_root(1, 2));
    CHECK(two[1] == positive_root(1, 2, 2));
    CHECK(two[2] == simple_root(2, 2));
    CHECK(all_positive_roots(4).size() == 10);
    CHECK(all_positive_roots(1) == std::vector<RootVector>{simple_root(1, 1)});

    for (int r = 1; r <= 8; ++r) {
        auto roots = all_positive_roots(r);
        CHECK(roots.size() == static_cast<std::size_t>(r * (r + 1) / 2));
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("alpha_of_index_set")
{
    CHECK(alpha_of_index_set(IndexSet(5, {1, 2, 4})).coeffs() == std::vector<int>{1, 1, 0, 1, 0});
    CHECK(alpha_of_index_set(IndexSet::full(3)) == highest_root(3));
    CHECK_THROWS_AS(IndexSet(3, {4}), std::out_of_range);
    CHECK_THROWS_AS(alpha_of_index_set(IndexSet(3, {})), std::invalid_argument);

    for (const auto& set : all_nonempty_subsets(7)) {
        RootVector sum(7);
        for (const auto& run : interval_partition(set).intervals)
            sum += positive_root(run.i, run.j, 7);
        CHECK(alpha_of_index_set(set) == sum);
    }
}

TEST_CASE("rho_coords matches the half-sum of positive roots up to a constant")
{
    CHECK(rho_coords(2).coords() == std::vector<int>{2, 1, 0});
    CHECK(rho_coords(1).coords() == std::vector<int>{1, 0});
    CHECK(rho_coords(4).coords() == std::vector<int>{4, 3, 2, 1, 0});

    for (int r = 1; r <= 5; ++r) {
        const auto doubled = testing::doubled_rho_from_half_sum(r);
        std::vector<int> expected(r + 1);
        for (int k = 0; k <= r; ++k)
            expected[k] = r - 2 * k;
        CHECK(doubled == expected);
        // 2 * rho_coords - doubled is a constant vector.
        const auto ours = rho_coords(r).coords();
        for (int k = 0; k <= r; ++k)
            CHECK(2 * ours[k] - doubled[k] == 2 * ours[0] - doubled[0]);

        // The sum of doubled rho over roots, converted back, is the sum of all
        // positive roots.
        RootVector sum(r);
        for (const auto& root : all_positive_roots(r))
            sum += root;
        CHECK(to_root_basis(WeightVector(doubled)) == sum);
    }
}

TEST_CASE("to_root_basis")
{
    CHECK(to_root_basis(WeightVector({1, -1, 0})) == simple_root(1, 2));
    CHECK(to_root_basis(WeightVector({1, 0, -1})) == highest_root(2));
    CHECK_FALSE(to_root_basis(WeightVector({1, 1, 0})).has_value());
    CHECK(to_root_basis(WeightVector({-1, 1, 0}))->coeffs() == std::vector<int>{-1, 0});
}

TEST_CASE("embed and to_root_basis round trip")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < 500; ++t) {
        const int r = 1 + t % 9;
        std::vector<int> c(r);
        for (auto& x : c)
            x = coeff(rng);
        const RootVector v(c);
        CHECK(to_root_basis(embed(v)) == v);
    }
}

TEST_CASE("rank mismatch")
{
    RootVector a(3), b(4);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
    CHECK_THROWS_AS(RootVector(0), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({1}), std::invalid_argument);
}
