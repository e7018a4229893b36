#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kwm/index_set.hpp"

namespace kwm {

// Element of the root lattice of type A_r, written over the simple roots:
// coeffs()[k] is the coefficient of alpha_{k+1}. Coefficients may be negative.
class RootVector {
public:
    // Zero vector of the given rank. Throws std::invalid_argument if rank < 1.
    explicit RootVector(int rank);
    // Throws std::invalid_argument if coeffs is empty.
    explicit RootVector(std::vector<int> coeffs);

    int rank() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int operator[](std::size_t k) const { return coeffs_[k]; }
    int& operator[](std::size_t k) { return coeffs_[k]; }

    bool is_zero() const;
    bool has_negative() const;

    RootVector& operator+=(const RootVector& other);
    RootVector& operator-=(const RootVector& other);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector&, const RootVector&) = default;

private:
    std::vector<int> coeffs_;
};

// Vector in the ambient space R^{r+1} over e_1..e_{r+1}, where the Weyl group
// acts by permuting coordinates.
class WeightVector {
public:
    // Throws std::invalid_argument unless coords has at least two entries.
    explicit WeightVector(std::vector<int> coords);

    int rank() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<int>& coords() const { return coords_; }
    int operator[](std::size_t k) const { return coords_[k]; }

    WeightVector& operator+=(const WeightVector& other);
    WeightVector& operator-=(const WeightVector& other);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<int> coords_;
};

// alpha_i. Throws std::out_of_range unless 1 <= i <= r.
RootVector simple_root(int i, int r);

// alpha_{i,j} = alpha_i + ... + alpha_j. Throws std::out_of_range unless
// 1 <= i <= j <= r.
RootVector positive_root(int i, int j, int r);

RootVector highest_root(int r);

// (i, j) with 1 <= i <= j <= r.
struct RootInterval {
    int i;
    int j;
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

// Positive roots as intervals, ordered lexicographically by (i, j).
std::vector<RootInterval> positive_root_intervals(int r);

// All r(r+1)/2 positive roots in lexicographic (i, j) order.
std::vector<RootVector> all_positive_roots(int r);

// Indicator vector of I. Throws std::invalid_argument if I is empty.
RootVector alpha_of_index_set(const IndexSet& set);

// Integer representative (r, r-1, ..., 1, 0) of rho. It differs from the true
// half-sum of positive roots by a multiple of the all-ones vector, which every
// coordinate permutation fixes.
WeightVector rho_coords(int r);

// Expansion over alpha_k = e_k - e_{k+1}.
WeightVector embed(const RootVector& v);

// Inverse of embed: c_i = coords_1 + ... + coords_i. Empty if the coordinate
// sum is nonzero.
std::optional<RootVector> to_root_basis(const WeightVector& w);

}  // namespace kwm
