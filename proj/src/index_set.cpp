#include "kwm/index_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kwm {

IndexSet::IndexSet(int rank, std::vector<int> members) : rank_(rank), members_(std::move(members))
{
    if (rank_ < 1)
        throw std::invalid_argument("IndexSet: rank must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 1 || members_.back() > rank_))
        throw std::out_of_range("IndexSet: member outside [1, " + std::to_string(rank_) + "]");
}

IndexSet IndexSet::full(int rank)
{
    return interval(rank, 1, rank);
}

IndexSet IndexSet::interval(int rank, int lo, int hi)
{
    std::vector<int> m;
    for (int i = lo; i <= hi; ++i)
        m.push_back(i);
    return IndexSet(rank, std::move(m));
}

bool IndexSet::contains(int i) const
{
    return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::complement() const
{
    std::vector<int> out;
    for (int i = 1; i <= rank_; ++i)
        if (!contains(i))
            out.push_back(i);
    return IndexSet(rank_, std::move(out));
}

std::string to_spec(const IndexSet& set)
{
    std::ostringstream out;
    const auto& m = set.members();
    for (std::size_t a = 0; a < m.size();) {
        std::size_t b = a;
        while (b + 1 < m.size() && m[b + 1] == m[b] + 1)
            ++b;
        if (a > 0)
            out << ',';
        out << m[a];
        if (b > a)
            out << '-' << m[b];
        a = b + 1;
    }
    return out.str();
}

std::vector<IndexSet> all_nonempty_subsets(int rank)
{
    if (rank < 1 || rank > 30)
        throw std::invalid_argument("all_nonempty_subsets: rank must lie in [1, 30]");
    std::vector<IndexSet> out;
    const unsigned long total = 1ul << rank;
    out.reserve(total - 1);
    for (unsigned long mask = 1; mask < total; ++mask) {
        std::vector<int> m;
        for (int i = 0; i < rank; ++i)
            if (mask & (1ul << i))
                m.push_back(i + 1);
        out.emplace_back(rank, std::move(m));
    }
    return out;
}

}  // namespace kwm
