#pragma once

#include <string>
#include <vector>

namespace kwm {

// A subset of [r] = {1, ..., r}, stored sorted and duplicate-free.
class IndexSet {
public:
    // Throws std::invalid_argument if rank < 1 and std::out_of_range if a
    // member lies outside [1, rank]. Duplicates are merged.
    IndexSet(int rank, std::vector<int> members);

    static IndexSet full(int rank);
    static IndexSet interval(int rank, int lo, int hi);

    int rank() const { return rank_; }
    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int i) const;

    // [r] \ I, possibly empty.
    IndexSet complement() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    int rank_;
    std::vector<int> members_;
};

// Compact form with runs collapsed: {1,3,4,5,7} -> "1,3-5,7". Empty -> "".
std::string to_spec(const IndexSet& set);

// Every nonempty subset of [rank], in increasing bitmask order.
std::vector<IndexSet> all_nonempty_subsets(int rank);

}  // namespace kwm
