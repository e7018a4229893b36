#include "kwm/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kwm {

namespace {

void check_same_rank(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

}  // namespace

RootVector::RootVector(int rank)
{
    if (rank < 1)
        throw std::invalid_argument("RootVector: rank must be positive");
    coeffs_.assign(rank, 0);
}

RootVector::RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("RootVector: rank must be positive");
}

bool RootVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool RootVector::has_negative() const
{
    return std::any_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c < 0; });
}

RootVector& RootVector::operator+=(const RootVector& other)
{
    check_same_rank(coeffs_.size(), other.coeffs_.size(), "RootVector");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& other)
{
    check_same_rank(coeffs_.size(), other.coeffs_.size(), "RootVector");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

WeightVector::WeightVector(std::vector<int> coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2)
        throw std::invalid_argument("WeightVector: needs rank + 1 >= 2 coordinates");
}

WeightVector& WeightVector::operator+=(const WeightVector& other)
{
    check_same_rank(coords_.size(), other.coords_.size(), "WeightVector");
    for (std::size_t k = 0; k < coords_.size(); ++k)
        coords_[k] += other.coords_[k];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other)
{
    check_same_rank(coords_.size(), other.coords_.size(), "WeightVector");
    for (std::size_t k = 0; k < coords_.size(); ++k)
        coords_[k] -= other.coords_[k];
    return *this;
}

RootVector simple_root(int i, int r)
{
    return positive_root(i, i, r);
}

RootVector positive_root(int i, int j, int r)
{
    if (r < 1 || i < 1 || j > r || i > j)
        throw std::out_of_range("positive_root: need 1 <= i <= j <= r, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " r=" + std::to_string(r));
    RootVector v(r);
    for (int k = i; k <= j; ++k)
        v[k - 1] = 1;
    return v;
}

RootVector highest_root(int r)
{
    return positive_root(1, r, r);
}

std::vector<RootInterval> positive_root_intervals(int r)
{
    if (r < 1)
        throw std::invalid_argument("positive_root_intervals: rank must be positive");
    std::vector<RootInterval> out;
    out.reserve(static_cast<std::size_t>(r) * (r + 1) / 2);
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<RootVector> all_positive_roots(int r)
{
    std::vector<RootVector> out;
    for (auto [i, j] : positive_root_intervals(r))
        out.push_back(positive_root(i, j, r));
    return out;
}

RootVector alpha_of_index_set(const IndexSet& set)
{
    if (set.empty())
        throw std::invalid_argument("alpha_of_index_set: index set is empty");
    RootVector v(set.rank());
    for (int i : set.members())
        v[i - 1] = 1;
    return v;
}

WeightVector rho_coords(int r)
{
    if (r < 1)
        throw std::invalid_argument("rho_coords: rank must be positive");
    std::vector<int> c(r + 1);
    for (int k = 0; k <= r; ++k)
        c[k] = r - k;
    return WeightVector(std::move(c));
}

WeightVector embed(const RootVector& v)
{
    const int r = v.rank();
    std::vector<int> c(r + 1, 0);
    for (int k = 0; k < r; ++k) {
        c[k] += v[k];
        c[k + 1] -= v[k];
    }
    return WeightVector(std::move(c));
}

std::optional<RootVector> to_root_basis(const WeightVector& w)
{
    const auto& c = w.coords();
    std::vector<int> out(c.size() - 1);
    int running = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        running += c[k];
        out[k] = running;
    }
    if (running + c.back() != 0)
        return std::nullopt;
    return RootVector(std::move(out));
}

}  // namespace kwm
