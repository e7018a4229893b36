#include "kwm/partition.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kwm/altset.hpp"

namespace kwm {

std::size_t PartitionTable::KeyHash::operator()(const Key& k) const noexcept
{
    // FNV-1a over the root index and coefficients.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(k.root));
    for (int c : k.remaining)
        mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)));
    return static_cast<std::size_t>(h);
}

PartitionTable::PartitionTable(int rank, Strategy strategy)
    : rank_(rank), strategy_(strategy), roots_(positive_root_intervals(rank))
{
}

int PartitionTable::first_root_starting_at(int i) const
{
    // Roots starting below i number (i-1) r - (i-1)(i-2)/2.
    return (i - 1) * rank_ - (i - 1) * (i - 2) / 2;
}

QPolynomial PartitionTable::kostant_q(const RootVector& xi)
{
    if (xi.rank() != rank_)
        throw std::invalid_argument("PartitionTable: rank mismatch (table " + std::to_string(rank_) +
                                    ", input " + std::to_string(xi.rank()) + ")");
    ++invocations_;
    if (xi.has_negative())
        return {};

    if (strategy_ == Strategy::direct) {
        auto remaining = xi.coeffs();
        return solve(remaining, 0);
    }

    QPolynomial product = QPolynomial::constant(1);
    const auto& c = xi.coeffs();
    std::vector<int> component(rank_, 0);
    for (int a = 0; a < rank_;) {
        if (c[a] == 0) {
            ++a;
            continue;
        }
        int b = a;
        while (b < rank_ && c[b] != 0)
            ++b;
        std::fill(component.begin(), component.end(), 0);
        std::copy(c.begin() + a, c.begin() + b, component.begin());
        product *= solve(component, 0);
        a = b;
    }
    return product;
}

QPolynomial PartitionTable::solve(std::vector<int>& remaining, int root)
{
    const auto first_nonzero =
        std::find_if(remaining.begin(), remaining.end(), [](int c) { return c != 0; });
    if (first_nonzero == remaining.end())
        return QPolynomial::constant(1);

    // The least uncovered position must be covered by a root starting there.
    const int lead = static_cast<int>(first_nonzero - remaining.begin()) + 1;
    const int roots_total = static_cast<int>(roots_.size());
    if (root >= roots_total || roots_[root].i > lead)
        return {};
    if (roots_[root].i < lead)
        root = first_root_starting_at(lead);

    Key key{remaining, root};
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const auto [i, j] = roots_[root];
    int max_copies = remaining[i - 1];
    for (int p = i; p <= j; ++p)
        max_copies = std::min(max_copies, remaining[p - 1]);

    QPolynomial result;
    for (int m = 0; m <= max_copies; ++m) {
        if (m > 0)
            for (int p = i; p <= j; ++p)
                --remaining[p - 1];
        result += QPolynomial::monomial(m) * solve(remaining, root + 1);
    }
    for (int p = i; p <= j; ++p)
        remaining[p - 1] += max_copies;

    assert(std::all_of(result.coeffs().begin(), result.coeffs().end(),
                       [](QPolynomial::Coefficient c) { return c >= 0; }));
    memo_.emplace(std::move(key), result);
    return result;
}

QPolynomial kostant_q(const RootVector& xi)
{
    PartitionTable table(xi.rank());
    return table.kostant_q(xi);
}

std::int64_t kostant(const RootVector& xi)
{
    return eval_at_one(kostant_q(xi));
}

namespace {

void enumerate_multisets(const std::vector<RootVector>& roots, std::size_t from,
                         std::vector<int>& remaining, int used, std::vector<QPolynomial::Coefficient>& counts)
{
    if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; })) {
        if (counts.size() <= static_cast<std::size_t>(used))
            counts.resize(used + 1, 0);
        ++counts[used];
        return;
    }
    for (std::size_t k = from; k < roots.size(); ++k) {
        const auto& root = roots[k].coeffs();
        bool fits = true;
        for (std::size_t p = 0; p < root.size(); ++p)
            if (root[p] > remaining[p]) {
                fits = false;
                break;
            }
        if (!fits)
            continue;
        for (std::size_t p = 0; p < root.size(); ++p)
            remaining[p] -= root[p];
        enumerate_multisets(roots, k, remaining, used + 1, counts);
        for (std::size_t p = 0; p < root.size(); ++p)
            remaining[p] += root[p];
    }
}

}  // namespace

QPolynomial kostant_q_oracle(const RootVector& xi, int cap)
{
    long total = 0;
    for (int c : xi.coeffs())
        total += std::abs(c);
    if (total > cap)
        throw CapExceeded("kostant_q_oracle: sum of |coefficients| " + std::to_string(total) +
                          " exceeds the oracle cap of " + std::to_string(cap));
    if (xi.has_negative())
        return {};
    const auto roots = all_positive_roots(xi.rank());
    auto remaining = xi.coeffs();
    std::vector<QPolynomial::Coefficient> counts;
    enumerate_multisets(roots, 0, remaining, 0, counts);
    return QPolynomial(std::move(counts));
}

QPolynomial kostant_q_interval_closed_form(int i, int j, int r)
{
    if (r < 1 || i < 1 || j > r || i > j)
        throw std::out_of_range("kostant_q_interval_closed_form: need 1 <= i <= j <= r");
    return QPolynomial::q() * pow(QPolynomial{1, 1}, static_cast<unsigned>(j - i));
}

QPolynomial factorize_over_intervals(const IndexSet& set)
{
    if (set.empty())
        throw std::invalid_argument("factorize_over_intervals: index set is empty");
    PartitionTable table(set.rank());
    QPolynomial product = QPolynomial::constant(1);
    for (const auto& run : interval_partition(set).intervals)
        product *= table.kostant_q(positive_root(run.i, run.j, set.rank()));
    return product;
}

}  // namespace kwm
