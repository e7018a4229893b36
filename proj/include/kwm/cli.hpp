#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kwm/index_set.hpp"
#include "kwm/poly.hpp"
#include "kwm/roots.hpp"

#include <json.hpp>

namespace kwm::cli {

// Thrown for malformed or out-of-range user input; the CLI exits with code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, latex };

// Grammar: item (',' item)*, item = k | a-b (inclusive). Duplicates merge.
// Throws UsageError on a malformed token, an index outside [1, r] or an empty
// result.
IndexSet parse_index_set(const std::string& spec, int r);

// "c1,c2,...,cr" with exactly r signed integers.
RootVector parse_coeffs(const std::string& spec, int r);

// A --mu argument: an index-set spec, or "coeffs:c1,...,cr" for an arbitrary
// root-lattice weight. index_set is set whenever the weight is a nonzero 0/1
// vector, which is what the closed-form methods require.
struct MuSpec {
    RootVector weight;
    std::optional<IndexSet> index_set;
};
MuSpec parse_mu(const std::string& spec, int r);

struct RunConfig {
    std::string command;  // partition | altset | multiplicity | verify | bench
    int rank = 0;
    int max_rank = 0;
    int min_rank = 1;
    std::string mu_spec;
    std::string xi_spec;
    std::string lambda_spec;  // empty: the highest root
    std::string method;
    Format format = Format::text;
    int brute_cap = 9;
    int oracle_cap = 20;
    std::uint64_t seed = 1;
    int samples = 200;
    int large_rank = 30;
    unsigned threads = 0;
    std::string factors = "closed";  // closed | brute
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. Output for a fixed config is deterministic except for
// the timing column of bench.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
// Honors KWM_BRUTE_CAP as the default brute-force cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// JSON encodings.
nlohmann::ordered_json to_json(const QPolynomial& p);
nlohmann::ordered_json to_json(const RootVector& v);
QPolynomial poly_from_json(const nlohmann::json& j);

}  // namespace kwm::cli
