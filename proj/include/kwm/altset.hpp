#pragma once

#include <cstdint>
#include <vector>

#include "kwm/errors.hpp"
#include "kwm/index_set.hpp"
#include "kwm/roots.hpp"
#include "kwm/weyl.hpp"

namespace kwm {

// Decomposition of an index set into maximal runs [i_x, j_x] of consecutive
// integers, in increasing order. Consecutive runs satisfy i_{x+1} >= j_x + 2.
struct IntervalPartition {
    std::vector<RootInterval> intervals;

    // n(I).
    std::size_t count() const { return intervals.size(); }
    friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

// Throws std::invalid_argument if the set is empty.
IntervalPartition interval_partition(const IndexSet& set);

// n(I^c): the number of maximal runs of [r] \ I (0 when I = [r]). Throws
// std::invalid_argument if I is empty.
int n_of_complement(const IndexSet& set);

// F_1 = F_2 = 1. Throws std::out_of_range unless 1 <= n <= 93 (F_93 is the
// largest that fits in 64 bits).
std::uint64_t fibonacci(int n);

// Calls f(subset) for every subset of the sorted `pool` with no two members
// differing by 1, the empty subset first, in lexicographic order of
// membership choices. `subset` is a sorted std::vector<int>.
template <typename F>
void for_each_nonconsecutive_subset(const std::vector<int>& pool, F&& f)
{
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (next == pool.size()) {
            f(static_cast<const std::vector<int>&>(chosen));
            return;
        }
        self(self, next + 1);
        if (chosen.empty() || chosen.back() + 1 != pool[next]) {
            chosen.push_back(pool[next]);
            self(self, next + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
}

// Every subset of [lo, hi] without two consecutive members, including the
// empty set; there are F_{hi-lo+3} of them. An empty interval (hi = lo - 1)
// yields only the empty set. Throws std::invalid_argument if hi < lo - 1.
std::vector<std::vector<int>> nonconsecutive_subsets(int lo, int hi);

// Weyl alternation set A(theta, alpha_I): the Weyl elements with a nonzero
// term in the multiplicity sum for lambda = theta, mu = alpha_I.
struct AltSet {
    int rank;
    IndexSet mu;
    // Sorted by image.
    std::vector<WeylElement> elements;
    // l_0 = i_1, then i_{x+1} - j_x + 1 for each gap between runs of I, then
    // r - j_{n(I)} + 1: n(I) + 1 entries whose Fibonacci product is |elements|.
    std::vector<int> fib_profile;

    std::uint64_t fibonacci_product() const;
};

std::vector<int> fibonacci_profile(const IndexSet& set);

// Elements are the products of s_i over nonconsecutive subsets of
// I^c \ {1, r}. Throws std::invalid_argument if I is empty.
AltSet alt_set_closed(const IndexSet& set);

// Product of F_{l_x} over the profile. Throws std::invalid_argument if I is
// empty.
std::uint64_t alt_set_cardinality(const IndexSet& set);

struct BruteOptions {
    int cap = kDefaultBruteCap;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

// Filters all of W by kostant(sigma(lambda + rho) - rho - mu) > 0, for any
// lambda, mu in the root lattice of rank r. Sorted by image. Throws
// CapExceeded if r > options.cap, std::invalid_argument on a rank mismatch.
std::vector<WeylElement> alt_set_brute(const RootVector& lambda, const RootVector& mu,
                                       const BruteOptions& options = {});

}  // namespace kwm
