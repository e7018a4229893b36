#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kwm/errors.hpp"
#include "kwm/index_set.hpp"
#include "kwm/poly.hpp"
#include "kwm/roots.hpp"

namespace kwm {

// Memoized q-analog of Kostant's partition function for one rank.
//
// kostant_q(xi) returns sum_i c_i q^i where c_i counts the multisets of exactly
// i positive roots summing to xi. Positive roots are processed in
// lexicographic (i, j) order; a state is (remaining vector, first usable root)
// and the recurrence branches on how many copies of the current root are used.
//
// A table is not synchronized. Use one table per thread; results do not depend
// on which table computed them.
class PartitionTable {
public:
    enum class Strategy {
        // Split xi into maximal runs of nonzero coefficients, evaluate each run
        // shifted to start at alpha_1 and multiply. Roots are intervals, so no
        // root can straddle a zero coefficient.
        split_components,
        // Run the recurrence on xi as given.
        direct,
    };

    // Throws std::invalid_argument if rank < 1.
    explicit PartitionTable(int rank, Strategy strategy = Strategy::split_components);

    int rank() const { return rank_; }
    Strategy strategy() const { return strategy_; }

    // Zero if any coefficient is negative, 1 if xi = 0. Throws
    // std::invalid_argument if xi.rank() != rank().
    QPolynomial kostant_q(const RootVector& xi);

    // Number of kostant_q calls answered so far (memo hits included).
    std::uint64_t invocations() const { return invocations_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        std::vector<int> remaining;
        int root;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    QPolynomial solve(std::vector<int>& remaining, int root);
    // Index of the first root alpha_{i,i}.
    int first_root_starting_at(int i) const;

    int rank_;
    Strategy strategy_;
    std::vector<RootInterval> roots_;
    std::unordered_map<Key, QPolynomial, KeyHash> memo_;
    std::uint64_t invocations_ = 0;
};

// One-shot evaluation with a fresh table.
QPolynomial kostant_q(const RootVector& xi);

// Kostant's partition function: kostant_q(xi) at q = 1.
std::int64_t kostant(const RootVector& xi);

// Independent oracle: exhaustive backtracking over nondecreasing sequences of
// positive roots, no memoization. Throws CapExceeded if the sum of |coeffs|
// exceeds `cap`.
QPolynomial kostant_q_oracle(const RootVector& xi, int cap = kDefaultOracleCap);

// q (q+1)^(j-i). Throws std::out_of_range unless 1 <= i <= j <= r.
QPolynomial kostant_q_interval_closed_form(int i, int j, int r);

// Product of kostant_q(alpha_{i_x, j_x}) over the maximal runs of I. Throws
// std::invalid_argument if I is empty.
QPolynomial factorize_over_intervals(const IndexSet& set);

}  // namespace kwm
