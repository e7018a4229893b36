#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kwm/altset.hpp"
#include "kwm/index_set.hpp"
#include "kwm/poly.hpp"
#include "kwm/roots.hpp"

namespace kwm {

enum class Method { brute, altset, rank_reduction, closed };

std::string to_string(Method m);

// Value of m_q(lambda, mu) together with how it was obtained.
struct MultiplicityResult {
    int rank;
    RootVector lambda;
    RootVector mu;
    QPolynomial value;
    Method method;
    // Partition-function evaluations performed: (r+1)! for brute, |A| for
    // altset, 0 for closed forms.
    std::uint64_t terms_evaluated;
};

// sum over all sigma in W of (-1)^l(sigma) kostant_q(sigma(lambda + rho) - rho - mu).
// Any lambda, mu in the root lattice. Throws CapExceeded if the rank exceeds
// options.cap.
MultiplicityResult m_q_brute(const RootVector& lambda, const RootVector& mu,
                             const BruteOptions& options = {});

// The same sum restricted to the closed-form alternation set A(theta, alpha_I).
// Runs in |A| = prod F_{l_x} terms, so it reaches ranks far beyond brute force.
MultiplicityResult m_q_altset(const IndexSet& set);

// q + q^2 + ... + q^r.
QPolynomial m_q_closed_zero(int r);

// m_q(theta, alpha_{i,j}) = q^(r-j+i-1). Throws std::out_of_range unless
// 1 <= i <= j <= r.
QPolynomial m_q_closed_positive_root(int r, int i, int j);

// m_q(theta, alpha_{1,i} + alpha_{i+j+1,r}) = q^j - q^(j-1). Throws
// std::out_of_range unless 1 <= i <= r-2 and 1 <= j <= r-i-1.
QPolynomial m_q_closed_two_intervals(int r, int i, int j);

// (q-1)^(n(I)-1) q^(r-|I|-n(I)+1), expanded. Throws std::invalid_argument if
// I is empty.
QPolynomial m_q_closed_general(const IndexSet& set);

// Where the lower-rank factors of the rank reduction come from.
enum class FactorSource {
    closed,  // the positive-root and two-interval closed forms
    brute,   // lower-rank brute-force Weyl sums
};

// One factor of the rank reduction: m_q(theta_rank, alpha_J) at a lower rank,
// produced by one maximal run of I^c.
struct ReductionFactor {
    enum class Kind { left_edge, gap, right_edge };
    Kind kind;
    int rank;
    IndexSet mu;
    QPolynomial value;
};

// Splits m_q(theta, alpha_I) over the runs of I^c:
//   [1, i_1 - 1]          -> m_q(theta_{i_1}, alpha_{i_1})
//   [j_x + 1, i_{x+1} - 1] -> m_q(theta_R, alpha_1 + alpha_R), R = i_{x+1} - j_x + 1
//   [j_n + 1, r]          -> m_q(theta_R, alpha_1), R = r - j_n + 1
std::vector<ReductionFactor> rank_reduction_factors(const IndexSet& set,
                                                    FactorSource source = FactorSource::closed,
                                                    const BruteOptions& options = {});

// Product of rank_reduction_factors; 1 when I = [r].
QPolynomial m_q_rank_reduction(const IndexSet& set, FactorSource source = FactorSource::closed,
                               const BruteOptions& options = {});

// m(theta, alpha_I) = m_q at q = 1: 1 if I is a single run, 0 otherwise.
std::int64_t m_classical(const IndexSet& set);

// Dispatch used by the CLI: lambda = theta, mu = alpha_I.
MultiplicityResult compute_multiplicity(const IndexSet& set, Method method,
                                        const BruteOptions& options = {});

}  // namespace kwm
