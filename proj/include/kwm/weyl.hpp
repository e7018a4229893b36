#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "kwm/errors.hpp"
#include "kwm/roots.hpp"

namespace kwm {

// Element of W = S_{r+1} in one-line notation: image()[k] is the image of
// position k+1, as a value in 1..r+1.
class WeylElement {
public:
    // Identity of rank r. Throws std::invalid_argument if r < 1.
    static WeylElement identity(int r);

    // Throws std::invalid_argument unless image is a permutation of 1..n, n >= 2.
    explicit WeylElement(std::vector<int> image);

    int rank() const { return static_cast<int>(image_.size()) - 1; }
    const std::vector<int>& image() const { return image_; }
    bool is_identity() const;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
    struct Unchecked {};
    WeylElement(std::vector<int> image, Unchecked) : image_(std::move(image)) {}
    friend class WeylGroup;

    std::vector<int> image_;
};

// s_i, the transposition of positions i and i+1. Throws std::out_of_range
// unless 1 <= i <= r.
WeylElement simple_reflection(int i, int r);

// Coordinate permutation: result[w(k)] = v[k]. Throws std::invalid_argument on
// a rank mismatch.
WeightVector apply(const WeylElement& w, const WeightVector& v);

// Inversion count, equal to the minimal number of simple reflections.
int length(const WeylElement& w);

// (-1)^length(w).
int sign(const WeylElement& w);

// a after b, so compose(s_i, s_j) is the word s_i s_j acting on the left.
WeylElement compose(const WeylElement& a, const WeylElement& b);

// Product of s_i over pairwise nonconsecutive indices (these commute).
// Throws std::invalid_argument on a consecutive pair and std::out_of_range on
// an index outside [1, r].
WeylElement product_of_commuting(const std::vector<int>& indices, int r);

// A reduced word w = s_{a_1} s_{a_2} ... s_{a_k}. For products of commuting
// reflections the letters come out in increasing order.
std::vector<int> reduced_word(const WeylElement& w);

// "[2,1,3]".
std::string to_image_string(const WeylElement& w);
// "s2*s4"; "1" for the identity.
std::string to_word_string(const WeylElement& w);

// Parses the word form accepted by to_word_string ("1", "s2", "s2*s4") for a
// product of pairwise nonconsecutive reflections. Throws std::invalid_argument.
WeylElement parse_word(const std::string& text, int r);

// The full group S_{r+1}, iterated lexicographically on the image array.
// slice(v) restricts iteration to elements with image()[0] == v so that sums
// over W can be split across workers.
class WeylGroup {
public:
    // Throws CapExceeded if r > cap and std::invalid_argument if r < 1.
    explicit WeylGroup(int r, int cap = kDefaultBruteCap);

    int rank() const { return rank_; }
    std::uint64_t order() const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeylElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const WeylElement*;
        using reference = const WeylElement&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class WeylGroup;
        iterator(std::vector<int> start, int fixed_first);

        WeylElement current_{std::vector<int>{1, 2}, WeylElement::Unchecked{}};
        int fixed_first_ = 0;  // 0: iterate everything
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return iterator(); }

    // Elements whose first image is `first` (1 <= first <= r+1).
    struct Slice {
        int rank;
        int first;
        iterator begin() const;
        iterator end() const { return iterator(); }
    };
    Slice slice(int first) const;

private:
    int rank_;
};

}  // namespace kwm
