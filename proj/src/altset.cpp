#include "kwm/altset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kwm/partition.hpp"
#include "weyl_sweep.hpp"

namespace kwm {

namespace {

void require_nonempty(const IndexSet& set, const char* what)
{
    if (set.empty())
        throw std::invalid_argument(std::string(what) + ": index set is empty");
}

IntervalPartition runs_of(const std::vector<int>& members)
{
    IntervalPartition out;
    for (std::size_t a = 0; a < members.size();) {
        std::size_t b = a;
        while (b + 1 < members.size() && members[b + 1] == members[b] + 1)
            ++b;
        out.intervals.push_back({members[a], members[b]});
        a = b + 1;
    }
    return out;
}

}  // namespace

IntervalPartition interval_partition(const IndexSet& set)
{
    require_nonempty(set, "interval_partition");
    return runs_of(set.members());
}

int n_of_complement(const IndexSet& set)
{
    require_nonempty(set, "n_of_complement");
    return static_cast<int>(runs_of(set.complement().members()).count());
}

std::uint64_t fibonacci(int n)
{
    if (n < 1 || n > 93)
        throw std::out_of_range("fibonacci: n = " + std::to_string(n) + " outside [1, 93]");
    std::uint64_t prev = 0, cur = 1;
    for (int k = 1; k < n; ++k) {
        const auto next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<std::vector<int>> nonconsecutive_subsets(int lo, int hi)
{
    if (hi < lo - 1)
        throw std::invalid_argument("nonconsecutive_subsets: need lo <= hi + 1");
    std::vector<int> pool;
    for (int k = lo; k <= hi; ++k)
        pool.push_back(k);
    std::vector<std::vector<int>> out;
    for_each_nonconsecutive_subset(pool, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

std::uint64_t AltSet::fibonacci_product() const
{
    std::uint64_t product = 1;
    for (int l : fib_profile)
        product *= fibonacci(l);
    return product;
}

std::vector<int> fibonacci_profile(const IndexSet& set)
{
    const auto runs = interval_partition(set).intervals;
    std::vector<int> profile{runs.front().i};
    for (std::size_t x = 0; x + 1 < runs.size(); ++x)
        profile.push_back(runs[x + 1].i - runs[x].j + 1);
    profile.push_back(set.rank() - runs.back().j + 1);
    return profile;
}

AltSet alt_set_closed(const IndexSet& set)
{
    require_nonempty(set, "alt_set_closed");
    const int r = set.rank();
    std::vector<int> pool;
    const IndexSet complement = set.complement();
    for (int i : complement.members())
        if (i != 1 && i != r)
            pool.push_back(i);

    AltSet out{r, set, {}, fibonacci_profile(set)};
    for_each_nonconsecutive_subset(pool, [&](const std::vector<int>& chosen) {
        out.elements.push_back(product_of_commuting(chosen, r));
    });
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::uint64_t alt_set_cardinality(const IndexSet& set)
{
    require_nonempty(set, "alt_set_cardinality");
    std::uint64_t product = 1;
    for (int l : fibonacci_profile(set))
        product *= fibonacci(l);
    return product;
}

std::vector<WeylElement> alt_set_brute(const RootVector& lambda, const RootVector& mu,
                                       const BruteOptions& options)
{
    if (lambda.rank() != mu.rank())
        throw std::invalid_argument("alt_set_brute: rank mismatch between lambda and mu");
    const int r = lambda.rank();
    const WeylGroup group(r, options.cap);
    const WeightVector rho = rho_coords(r);
    const WeightVector shifted = embed(lambda) + rho;
    const WeightVector offset = rho + embed(mu);

    struct State {
        PartitionTable table;
        std::vector<WeylElement> found;
    };
    auto states = detail::sweep_weyl_group<State>(
        group, options.threads, [r] { return State{PartitionTable(r), {}}; },
        [&](State& state, const WeylElement& w) {
            const auto xi = to_root_basis(apply(w, shifted) - offset);
            if (!xi)
                throw std::logic_error("alt_set_brute: weight left the root lattice");
            if (!state.table.kostant_q(*xi).is_zero())
                state.found.push_back(w);
        });

    std::vector<WeylElement> out;
    for (auto& s : states)
        out.insert(out.end(), s.found.begin(), s.found.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kwm
