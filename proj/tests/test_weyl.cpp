#include <doctest.h>

#include <set>
#include <stdexcept>

#include "kwm/weyl.hpp"
#include "oracles.hpp"

using namespace kwm;

TEST_CASE("simple_reflection")
{
    CHECK(simple_reflection(1, 2).image() == std::vector<int>{2, 1, 3});
    CHECK(apply(simple_reflection(1, 2), WeightVector({1, 0, -1})).coords() == std::vector<int>{0, 1, -1});
    CHECK_THROWS_AS(simple_reflection(3, 2), std::out_of_range);
}

TEST_CASE("apply inside the multiplicity sum")
{
    const int r = 2;
    const auto shifted = embed(highest_root(r)) + rho_coords(r);
    CHECK(apply(WeylElement::identity(r), shifted) == shifted);
    CHECK(to_root_basis(apply(simple_reflection(1, r), shifted) - rho_coords(r))->coeffs() ==
          std::vector<int>{-1, 1});
    CHECK(to_root_basis(apply(simple_reflection(2, r), shifted) - rho_coords(r))->coeffs() ==
          std::vector<int>{1, -1});
    CHECK_THROWS_AS(apply(WeylElement::identity(3), shifted), std::invalid_argument);
}

TEST_CASE("length and sign")
{
    CHECK(length(WeylElement::identity(4)) == 0);
    for (int i = 1; i <= 4; ++i) {
        CHECK(length(simple_reflection(i, 4)) == 1);
        CHECK(sign(simple_reflection(i, 4)) == -1);
    }
    const WeylElement reversal({4, 3, 2, 1});
    CHECK(testing::minimal_word_length(reversal.image()) == 6);
    CHECK(length(reversal) == 6);
    CHECK(sign(WeylElement::identity(3)) == 1);
    CHECK(sign(product_of_commuting({2, 4}, 5)) == 1);
}

TEST_CASE("length equals minimal word length on S_2..S_5")
{
    for (int r = 1; r <= 4; ++r)
        for (const auto& w : WeylGroup(r))
            CHECK(length(w) == testing::minimal_word_length(w.image()));
}

TEST_CASE("compose")
{
    const auto s1 = simple_reflection(1, 4), s3 = simple_reflection(3, 4);
    CHECK(compose(s1, s1) == WeylElement::identity(4));
    CHECK(compose(WeylElement::identity(4), s3) == s3);
    CHECK(compose(s1, s3) == compose(s3, s1));
    CHECK(compose(simple_reflection(1, 3), simple_reflection(2, 3)) !=
          compose(simple_reflection(2, 3), simple_reflection(1, 3)));
    CHECK_THROWS_AS(compose(s1, simple_reflection(1, 3)), std::invalid_argument);
}

TEST_CASE("compose is 'a after b' on points")
{
    const WeylElement a({2, 3, 1}), b({3, 1, 2});
    const auto ab = compose(a, b);
    for (int k = 1; k <= 3; ++k)
        CHECK(ab.image()[k - 1] == a.image()[b.image()[k - 1] - 1]);
    // Acting on a vector: apply(ab) = apply(a) after apply(b).
    const WeightVector v({7, 8, 9});
    CHECK(apply(ab, v) == apply(a, apply(b, v)));
}

TEST_CASE("length changes by one under a simple reflection; sign is multiplicative")
{
    for (int r = 1; r <= 4; ++r) {
        for (const auto& w : WeylGroup(r)) {
            for (int i = 1; i <= r; ++i) {
                const int d = length(compose(w, simple_reflection(i, r))) - length(w);
                CHECK((d == 1 || d == -1));
            }
            for (const auto& v : WeylGroup(r))
                CHECK(sign(compose(w, v)) == sign(w) * sign(v));
        }
    }
}

TEST_CASE("apply preserves the coordinate multiset")
{
    const WeightVector v({5, -2, 0, 3});
    auto sorted = v.coords();
    std::sort(sorted.begin(), sorted.end());
    for (const auto& w : WeylGroup(3)) {
        auto image = apply(w, v).coords();
        std::sort(image.begin(), image.end());
        CHECK(image == sorted);
    }
}

TEST_CASE("all_elements")
{
    CHECK(std::distance(WeylGroup(1).begin(), WeylGroup(1).end()) == 2);
    std::set<WeylElement> seen;
    WeylElement previous = WeylElement::identity(3);
    bool first = true;
    for (const auto& w : WeylGroup(3)) {
        if (!first)
            CHECK(previous < w);
        first = false;
        previous = w;
        seen.insert(w);
    }
    CHECK(seen.size() == 24);
    CHECK(WeylGroup(3).order() == 24);
    CHECK_THROWS_AS(WeylGroup(12), CapExceeded);
    CHECK_NOTHROW(WeylGroup(12, 12));
}

TEST_CASE("slices partition the group")
{
    const WeylGroup group(4);
    std::vector<WeylElement> joined;
    for (int first = 1; first <= 5; ++first)
        for (const auto& w : group.slice(first)) {
            CHECK(w.image()[0] == first);
            joined.push_back(w);
        }
    std::vector<WeylElement> all(group.begin(), group.end());
    CHECK(joined == all);
    CHECK(all.size() == 120);
}

TEST_CASE("product_of_commuting")
{
    CHECK(product_of_commuting({}, 4) == WeylElement::identity(4));
    const auto w = product_of_commuting({2, 4}, 5);
    CHECK(w.image() == std::vector<int>{1, 3, 2, 5, 4, 6});
    CHECK(length(w) == 2);
    CHECK_THROWS_AS(product_of_commuting({2, 3}, 5), std::invalid_argument);
    CHECK_THROWS_AS(product_of_commuting({6}, 5), std::out_of_range);

    // Length equals the number of factors for every nonconsecutive set in [1, 8].
    for (unsigned mask = 0; mask < (1u << 8); ++mask) {
        if (mask & (mask >> 1))
            continue;
        std::vector<int> idx;
        for (int k = 0; k < 8; ++k)
            if (mask & (1u << k))
                idx.push_back(k + 1);
        CHECK(length(product_of_commuting(idx, 8)) == static_cast<int>(idx.size()));
    }
}

TEST_CASE("word and image strings")
{
    CHECK(to_image_string(simple_reflection(1, 2)) == "[2,1,3]");
    CHECK(to_word_string(WeylElement::identity(3)) == "1");
    CHECK(to_word_string(product_of_commuting({4, 2}, 5)) == "s2*s4");
    CHECK(parse_word("s2*s4", 5) == product_of_commuting({2, 4}, 5));
    CHECK(parse_word("1", 5) == WeylElement::identity(5));
    CHECK_THROWS_AS(parse_word("s2*s3", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("t2", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s9", 5), std::invalid_argument);
}

TEST_CASE("reduced_word reproduces the element with minimal length")
{
    for (const auto& w : WeylGroup(4)) {
        const auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == length(w));
        WeylElement product = WeylElement::identity(4);
        for (int i : word)
            product = compose(product, simple_reflection(i, 4));
        CHECK(product == w);
    }
}

TEST_CASE("WeylElement validates its image")
{
    CHECK_THROWS_AS(WeylElement({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(WeylElement({1}), std::invalid_argument);
    CHECK_THROWS_AS(WeylElement({0, 1}), std::invalid_argument);
}
