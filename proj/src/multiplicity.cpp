#include "kwm/multiplicity.hpp"

#include <stdexcept>

#include "kwm/partition.hpp"
#include "weyl_sweep.hpp"

namespace kwm {

std::string to_string(Method m)
{
    switch (m) {
    case Method::brute: return "brute";
    case Method::altset: return "altset";
    case Method::rank_reduction: return "reduce";
    case Method::closed: return "closed";
    }
    return "unknown";
}

MultiplicityResult m_q_brute(const RootVector& lambda, const RootVector& mu, const BruteOptions& options)
{
    if (lambda.rank() != mu.rank())
        throw std::invalid_argument("m_q_brute: rank mismatch between lambda and mu");
    const int r = lambda.rank();
    const WeylGroup group(r, options.cap);
    const WeightVector rho = rho_coords(r);
    const WeightVector shifted = embed(lambda) + rho;
    const WeightVector offset = rho + embed(mu);

    struct State {
        PartitionTable table;
        QPolynomial sum;
    };
    auto states = detail::sweep_weyl_group<State>(
        group, options.threads, [r] { return State{PartitionTable(r), {}}; },
        [&](State& state, const WeylElement& w) {
            const auto xi = to_root_basis(apply(w, shifted) - offset);
            if (!xi)
                throw std::logic_error("m_q_brute: weight left the root lattice");
            auto term = state.table.kostant_q(*xi);
            if (sign(w) < 0)
                state.sum -= term;
            else
                state.sum += term;
        });

    QPolynomial total;
    for (const auto& s : states)
        total += s.sum;
    return {r, lambda, mu, std::move(total), Method::brute, group.order()};
}

MultiplicityResult m_q_altset(const IndexSet& set)
{
    if (set.empty())
        throw std::invalid_argument("m_q_altset: index set is empty");
    const int r = set.rank();
    const RootVector lambda = highest_root(r);
    const RootVector mu = alpha_of_index_set(set);
    const WeightVector rho = rho_coords(r);
    const WeightVector shifted = embed(lambda) + rho;
    const WeightVector offset = rho + embed(mu);

    std::vector<int> pool;
    const IndexSet complement = set.complement();
    for (int i : complement.members())
        if (i != 1 && i != r)
            pool.push_back(i);

    PartitionTable table(r);
    QPolynomial total;
    std::uint64_t terms = 0;
    for_each_nonconsecutive_subset(pool, [&](const std::vector<int>& chosen) {
        const WeylElement w = product_of_commuting(chosen, r);
        const auto xi = to_root_basis(apply(w, shifted) - offset);
        if (!xi)
            throw std::logic_error("m_q_altset: weight left the root lattice");
        auto term = table.kostant_q(*xi);
        // Products of commuting reflections have length |chosen|.
        if (chosen.size() % 2 == 1)
            total -= term;
        else
            total += term;
        ++terms;
    });
    return {r, lambda, mu, std::move(total), Method::altset, terms};
}

QPolynomial m_q_closed_zero(int r)
{
    if (r < 1)
        throw std::out_of_range("m_q_closed_zero: rank must be positive");
    std::vector<QPolynomial::Coefficient> c(r + 1, 1);
    c[0] = 0;
    return QPolynomial(std::move(c));
}

QPolynomial m_q_closed_positive_root(int r, int i, int j)
{
    if (r < 1 || i < 1 || j > r || i > j)
        throw std::out_of_range("m_q_closed_positive_root: need 1 <= i <= j <= r");
    return QPolynomial::monomial(static_cast<unsigned>(r - j + i - 1));
}

QPolynomial m_q_closed_two_intervals(int r, int i, int j)
{
    if (i < 1 || i > r - 2 || j < 1 || j > r - i - 1)
        throw std::out_of_range("m_q_closed_two_intervals: need i in [1, r-2] and j in [1, r-i-1]");
    return QPolynomial::monomial(static_cast<unsigned>(j)) -
           QPolynomial::monomial(static_cast<unsigned>(j - 1));
}

QPolynomial m_q_closed_general(const IndexSet& set)
{
    if (set.empty())
        throw std::invalid_argument("m_q_closed_general: index set is empty");
    const int runs = static_cast<int>(interval_partition(set).count());
    const int shift = set.rank() - static_cast<int>(set.size()) - runs + 1;
    return pow(QPolynomial{-1, 1}, static_cast<unsigned>(runs - 1)) *
           QPolynomial::monomial(static_cast<unsigned>(shift));
}

namespace {

QPolynomial brute_factor(int rank, const IndexSet& mu, const BruteOptions& options)
{
    return m_q_brute(highest_root(rank), alpha_of_index_set(mu), options).value;
}

}  // namespace

std::vector<ReductionFactor> rank_reduction_factors(const IndexSet& set, FactorSource source,
                                                    const BruteOptions& options)
{
    if (set.empty())
        throw std::invalid_argument("rank_reduction_factors: index set is empty");
    const int r = set.rank();
    const auto runs = interval_partition(set).intervals;
    std::vector<ReductionFactor> out;

    if (runs.front().i > 1) {
        const int rank = runs.front().i;
        IndexSet mu(rank, {rank});
        auto value = source == FactorSource::closed ? m_q_closed_positive_root(rank, rank, rank)
                                                    : brute_factor(rank, mu, options);
        out.push_back({ReductionFactor::Kind::left_edge, rank, std::move(mu), std::move(value)});
    }
    for (std::size_t x = 0; x + 1 < runs.size(); ++x) {
        const int rank = runs[x + 1].i - runs[x].j + 1;
        IndexSet mu(rank, {1, rank});
        auto value = source == FactorSource::closed ? m_q_closed_two_intervals(rank, 1, rank - 2)
                                                    : brute_factor(rank, mu, options);
        out.push_back({ReductionFactor::Kind::gap, rank, std::move(mu), std::move(value)});
    }
    if (runs.back().j < r) {
        const int rank = r - runs.back().j + 1;
        IndexSet mu(rank, {1});
        auto value = source == FactorSource::closed ? m_q_closed_positive_root(rank, 1, 1)
                                                    : brute_factor(rank, mu, options);
        out.push_back({ReductionFactor::Kind::right_edge, rank, std::move(mu), std::move(value)});
    }
    return out;
}

QPolynomial m_q_rank_reduction(const IndexSet& set, FactorSource source, const BruteOptions& options)
{
    QPolynomial product = QPolynomial::constant(1);
    for (const auto& f : rank_reduction_factors(set, source, options))
        product *= f.value;
    return product;
}

std::int64_t m_classical(const IndexSet& set)
{
    return eval_at_one(m_q_closed_general(set));
}

MultiplicityResult compute_multiplicity(const IndexSet& set, Method method, const BruteOptions& options)
{
    if (set.empty())
        throw std::invalid_argument("compute_multiplicity: index set is empty");
    const int r = set.rank();
    switch (method) {
    case Method::brute:
        return m_q_brute(highest_root(r), alpha_of_index_set(set), options);
    case Method::altset:
        return m_q_altset(set);
    case Method::rank_reduction:
        return {r, highest_root(r), alpha_of_index_set(set), m_q_rank_reduction(set), method, 0};
    case Method::closed:
        return {r, highest_root(r), alpha_of_index_set(set), m_q_closed_general(set), method, 0};
    }
    throw std::invalid_argument("compute_multiplicity: unknown method");
}

}  // namespace kwm
