#include "kwm/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kwm {

WeylElement WeylElement::identity(int r)
{
    if (r < 1)
        throw std::invalid_argument("WeylElement: rank must be positive");
    std::vector<int> image(r + 1);
    std::iota(image.begin(), image.end(), 1);
    return WeylElement(std::move(image), Unchecked{});
}

WeylElement::WeylElement(std::vector<int> image) : image_(std::move(image))
{
    const int n = static_cast<int>(image_.size());
    if (n < 2)
        throw std::invalid_argument("WeylElement: need at least two points");
    std::vector<bool> seen(n + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("WeylElement: image is not a permutation");
        seen[v] = true;
    }
}

bool WeylElement::is_identity() const
{
    for (std::size_t k = 0; k < image_.size(); ++k)
        if (image_[k] != static_cast<int>(k) + 1)
            return false;
    return true;
}

WeylElement simple_reflection(int i, int r)
{
    if (i < 1 || i > r)
        throw std::out_of_range("simple_reflection: index " + std::to_string(i) + " outside [1, " +
                                std::to_string(r) + "]");
    auto image = WeylElement::identity(r).image();
    std::swap(image[i - 1], image[i]);
    return WeylElement(std::move(image));
}

WeightVector apply(const WeylElement& w, const WeightVector& v)
{
    if (w.rank() != v.rank())
        throw std::invalid_argument("apply: rank mismatch");
    std::vector<int> out(v.coords().size());
    const auto& image = w.image();
    for (std::size_t k = 0; k < out.size(); ++k)
        out[image[k] - 1] = v[k];
    return WeightVector(std::move(out));
}

int length(const WeylElement& w)
{
    const auto& p = w.image();
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b])
                ++inversions;
    return inversions;
}

int sign(const WeylElement& w)
{
    return length(w) % 2 == 0 ? 1 : -1;
}

WeylElement compose(const WeylElement& a, const WeylElement& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("compose: rank mismatch");
    std::vector<int> out(a.image().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.image()[b.image()[k] - 1];
    return WeylElement(std::move(out));
}

WeylElement product_of_commuting(const std::vector<int>& indices, int r)
{
    auto sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto image = WeylElement::identity(r).image();
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const int i = sorted[k];
        if (i < 1 || i > r)
            throw std::out_of_range("product_of_commuting: index " + std::to_string(i) +
                                    " outside [1, " + std::to_string(r) + "]");
        if (k > 0 && sorted[k - 1] + 1 == i)
            throw std::invalid_argument("product_of_commuting: consecutive indices " +
                                        std::to_string(i - 1) + "," + std::to_string(i));
        std::swap(image[i - 1], image[i]);
    }
    return WeylElement(std::move(image));
}

std::vector<int> reduced_word(const WeylElement& w)
{
    // Peel off right descents w(i) > w(i+1), largest index first: w = w' s_i.
    auto p = w.image();
    std::vector<int> reversed;
    for (;;) {
        int descent = 0;
        for (std::size_t k = p.size() - 1; k > 0; --k) {
            if (p[k - 1] > p[k]) {
                descent = static_cast<int>(k);
                break;
            }
        }
        if (descent == 0)
            break;
        std::swap(p[descent - 1], p[descent]);
        reversed.push_back(descent);
    }
    return {reversed.rbegin(), reversed.rend()};
}

std::string to_image_string(const WeylElement& w)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < w.image().size(); ++k)
        out << (k ? "," : "") << w.image()[k];
    out << ']';
    return out.str();
}

std::string to_word_string(const WeylElement& w)
{
    const auto word = reduced_word(w);
    if (word.empty())
        return "1";
    std::ostringstream out;
    for (std::size_t k = 0; k < word.size(); ++k)
        out << (k ? "*" : "") << 's' << word[k];
    return out.str();
}

WeylElement parse_word(const std::string& text, int r)
{
    if (text == "1" || text == "e")
        return WeylElement::identity(r);
    std::vector<int> indices;
    std::istringstream in(text);
    std::string letter;
    while (std::getline(in, letter, '*')) {
        if (letter.size() < 2 || letter[0] != 's' ||
            !std::all_of(letter.begin() + 1, letter.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("parse_word: malformed letter '" + letter + "'");
        indices.push_back(std::stoi(letter.substr(1)));
    }
    if (indices.empty())
        throw std::invalid_argument("parse_word: empty word");
    auto sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("parse_word: repeated letter");
    try {
        return product_of_commuting(indices, r);
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(e.what());
    }
}

WeylGroup::WeylGroup(int r, int cap) : rank_(r)
{
    if (r < 1)
        throw std::invalid_argument("WeylGroup: rank must be positive");
    if (r > cap)
        throw CapExceeded("rank " + std::to_string(r) + " exceeds the brute-force cap of " +
                          std::to_string(cap) + " (|W| = " + std::to_string(r + 1) + "!)");
}

std::uint64_t WeylGroup::order() const
{
    std::uint64_t n = 1;
    for (int k = 2; k <= rank_ + 1; ++k)
        n *= static_cast<std::uint64_t>(k);
    return n;
}

WeylGroup::iterator::iterator(std::vector<int> start, int fixed_first)
    : current_(std::move(start), WeylElement::Unchecked{}), fixed_first_(fixed_first), done_(false)
{
}

WeylGroup::iterator& WeylGroup::iterator::operator++()
{
    auto& p = current_.image_;
    if (!std::next_permutation(p.begin(), p.end()) || (fixed_first_ != 0 && p[0] != fixed_first_))
        done_ = true;
    return *this;
}

WeylGroup::iterator WeylGroup::begin() const
{
    return iterator(WeylElement::identity(rank_).image(), 0);
}

WeylGroup::Slice WeylGroup::slice(int first) const
{
    if (first < 1 || first > rank_ + 1)
        throw std::out_of_range("WeylGroup::slice: first image out of range");
    return Slice{rank_, first};
}

WeylGroup::iterator WeylGroup::Slice::begin() const
{
    // Smallest permutation starting with `first`: first, then the rest ascending.
    std::vector<int> start{first};
    for (int v = 1; v <= rank + 1; ++v)
        if (v != first)
            start.push_back(v);
    return iterator(std::move(start), first);
}

}  // namespace kwm
