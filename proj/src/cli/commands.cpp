#include <chrono>
#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kwm/altset.hpp"
#include "kwm/cli.hpp"
#include "kwm/errors.hpp"
#include "kwm/multiplicity.hpp"
#include "kwm/partition.hpp"

namespace kwm::cli {

using nlohmann::ordered_json;

namespace {

BruteOptions brute_options(const RunConfig& c)
{
    return {c.brute_cap, c.threads};
}

void require_rank(int r)
{
    if (r < 1)
        throw UsageError("--rank must be a positive integer");
}

RootVector lambda_of(const RunConfig& c)
{
    if (c.lambda_spec.empty())
        return highest_root(c.rank);
    const std::string prefix = "coeffs:";
    const auto body = c.lambda_spec.rfind(prefix, 0) == 0 ? c.lambda_spec.substr(prefix.size())
                                                           : c.lambda_spec;
    return parse_coeffs(body, c.rank);
}

std::string latex_alpha_sum(const IndexSet& set)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& run : interval_partition(set).intervals) {
        out << (first ? "" : "+");
        first = false;
        if (run.i == run.j)
            out << "\\alpha_{" << run.i << "}";
        else
            out << "\\alpha_{" << run.i << "," << run.j << "}";
    }
    return out.str();
}

std::string csv_field(const std::string& s)
{
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

// ---------------------------------------------------------------- partition

int run_partition(const RunConfig& c, std::ostream& out)
{
    require_rank(c.rank);
    const RootVector xi = parse_coeffs(c.xi_spec, c.rank);
    const std::string method = c.method.empty() ? "dp" : c.method;
    QPolynomial value;
    if (method == "dp")
        value = kostant_q(xi);
    else if (method == "oracle")
        value = kostant_q_oracle(xi, c.oracle_cap);
    else
        throw UsageError("partition: --method must be dp or oracle");

    switch (c.format) {
    case Format::json: {
        ordered_json j{{"command", "partition"},
                       {"rank", c.rank},
                       {"method", method},
                       {"xi", to_json(xi)},
                       {"value", to_json(value)},
                       {"at_one", eval_at_one(value)}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::latex:
        out << to_latex(value) << '\n';
        break;
    case Format::text:
        out << "kostant_q = " << to_text(value) << '\n';
        out << "kostant   = " << eval_at_one(value) << '\n';
        break;
    }
    return kExitOk;
}

// ------------------------------------------------------------------- altset

int run_altset(const RunConfig& c, std::ostream& out)
{
    require_rank(c.rank);
    if (c.format == Format::latex)
        throw UsageError("altset: --format must be text or json");
    const MuSpec mu = parse_mu(c.mu_spec, c.rank);
    const std::string method = c.method.empty() ? "closed" : c.method;
    const bool theta = c.lambda_spec.empty();

    std::vector<WeylElement> elements;
    if (method == "closed") {
        if (!mu.index_set || !theta)
            throw UsageError("altset: the closed method needs lambda = theta and mu a sum of distinct "
                             "simple roots; use --method brute");
        elements = alt_set_closed(*mu.index_set).elements;
    } else if (method == "brute") {
        elements = alt_set_brute(lambda_of(c), mu.weight, brute_options(c));
    } else {
        throw UsageError("altset: --method must be brute or closed");
    }

    std::optional<std::vector<int>> profile;
    std::optional<std::uint64_t> predicted;
    if (mu.index_set && theta) {
        profile = fibonacci_profile(*mu.index_set);
        predicted = alt_set_cardinality(*mu.index_set);
    }

    if (c.format == Format::json) {
        ordered_json j{{"command", "altset"}, {"rank", c.rank}, {"method", method},
                       {"mu", to_json(mu.weight)}};
        if (mu.index_set)
            j["index_set"] = to_spec(*mu.index_set);
        ordered_json words = ordered_json::array();
        for (const auto& w : elements)
            words.push_back(to_word_string(w));
        j["elements"] = words;
        j["cardinality"] = elements.size();
        if (profile) {
            j["fib_profile"] = *profile;
            j["fibonacci_product"] = *predicted;
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    out << "alternation set, rank " << c.rank << ", mu = ";
    if (mu.index_set)
        out << "alpha_I, I = {" << to_spec(*mu.index_set) << "}";
    else
        out << c.mu_spec;
    out << " (" << method << ")\n";
    for (const auto& w : elements)
        out << "  " << to_word_string(w) << "  " << to_image_string(w) << '\n';
    out << "cardinality: " << elements.size() << '\n';
    if (profile) {
        out << "fibonacci profile:";
        for (int l : *profile)
            out << ' ' << l;
        out << "  (product " << *predicted << ")\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- multiplicity

int run_multiplicity(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_rank(c.rank);
    const MuSpec mu = parse_mu(c.mu_spec, c.rank);
    const std::string method = c.method.empty() ? "closed" : c.method;
    const bool theta = c.lambda_spec.empty();
    const RootVector lambda = lambda_of(c);
    const auto factor_source = c.factors == "brute" ? FactorSource::brute : FactorSource::closed;
    if (c.factors != "brute" && c.factors != "closed")
        throw UsageError("multiplicity: --factors must be closed or brute");

    std::vector<Method> methods;
    if (method == "all")
        methods = {Method::brute, Method::altset, Method::rank_reduction, Method::closed};
    else if (method == "brute")
        methods = {Method::brute};
    else if (method == "altset")
        methods = {Method::altset};
    else if (method == "reduce")
        methods = {Method::rank_reduction};
    else if (method == "closed")
        methods = {Method::closed};
    else
        throw UsageError("multiplicity: --method must be brute, altset, reduce, closed or all");

    const bool closed_eligible = mu.index_set && theta;
    if (!closed_eligible && !(methods.size() == 1 && methods[0] == Method::brute))
        throw UsageError("multiplicity: only --method brute accepts mu that is not a sum of distinct "
                         "simple roots, or lambda other than theta");

    std::vector<MultiplicityResult> results;
    std::vector<std::string> skipped;
    for (Method m : methods) {
        if (m == Method::brute) {
            if (method == "all" && c.rank > c.brute_cap) {
                skipped.push_back("brute (rank " + std::to_string(c.rank) + " exceeds cap " +
                                  std::to_string(c.brute_cap) + ")");
                continue;
            }
            results.push_back(m_q_brute(lambda, mu.weight, brute_options(c)));
        } else if (m == Method::rank_reduction) {
            results.push_back({c.rank, lambda, mu.weight,
                               m_q_rank_reduction(*mu.index_set, factor_source, brute_options(c)),
                               m, 0});
        } else {
            results.push_back(compute_multiplicity(*mu.index_set, m, brute_options(c)));
        }
    }

    bool agree = true;
    for (const auto& r : results)
        agree = agree && r.value == results.front().value;
    const bool verdict = method == "all";

    switch (c.format) {
    case Format::json: {
        ordered_json j{{"command", "multiplicity"}, {"rank", c.rank}, {"lambda", to_json(lambda)},
                       {"mu", to_json(mu.weight)}};
        if (mu.index_set)
            j["index_set"] = to_spec(*mu.index_set);
        ordered_json rows = ordered_json::array();
        for (const auto& r : results)
            rows.push_back({{"method", to_string(r.method)},
                            {"value", to_json(r.value)},
                            {"latex", to_latex(r.value)},
                            {"terms_evaluated", r.terms_evaluated}});
        j["results"] = rows;
        if (!skipped.empty())
            j["skipped"] = skipped;
        if (verdict)
            j["verdict"] = agree ? "AGREE" : "DISAGREE";
        out << j.dump(2) << '\n';
        break;
    }
    case Format::latex: {
        const std::string lhs = closed_eligible
                                    ? "m_q(\\theta," + latex_alpha_sum(*mu.index_set) + ")"
                                    : "m_q(\\lambda,\\mu)";
        for (const auto& r : results)
            out << "% " << to_string(r.method) << '\n' << lhs << "=" << to_latex(r.value) << '\n';
        if (verdict)
            out << "% " << (agree ? "AGREE" : "DISAGREE") << '\n';
        break;
    }
    case Format::text:
        out << "m_q(lambda, mu), rank " << c.rank << ", ";
        if (closed_eligible)
            out << "lambda = theta, mu = alpha_I, I = {" << to_spec(*mu.index_set) << "}\n";
        else
            out << "lambda = " << to_json(lambda)["coeffs"].dump() << ", mu = "
                << to_json(mu.weight)["coeffs"].dump() << '\n';
        for (const auto& r : results) {
            out << "  " << to_string(r.method) << std::string(8 - to_string(r.method).size(), ' ')
                << to_text(r.value);
            if (r.method == Method::brute || r.method == Method::altset)
                out << "    [" << r.terms_evaluated << " terms]";
            out << '\n';
        }
        for (const auto& s : skipped)
            out << "  skipped: " << s << '\n';
        if (verdict)
            out << "verdict: " << (agree ? "AGREE" : "DISAGREE") << '\n';
        break;
    }
    if (verdict && !agree) {
        err << "multiplicity: methods disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

// ------------------------------------------------------------------- verify

struct CheckTally {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
};

class Verifier {
public:
    Verifier(const RunConfig& c, std::ostream& out) : config_(c), out_(out), rng_(c.seed) {}

    bool run()
    {
        for (int r = 1; r <= config_.max_rank; ++r)
            run_rank(r);
        run_large_ranks();
        out_ << "verify: " << (failures_ == 0 ? "PASS" : "FAIL") << " (" << failures_
             << " mismatches)\n";
        return failures_ == 0;
    }

private:
    void report(int r, const CheckTally& t)
    {
        if (t.total == 0)
            return;
        out_ << "rank " << r << "  " << t.name << std::string(24 - t.name.size(), ' ') << t.passed << '/'
             << t.total << (t.passed == t.total ? "  ok" : "  FAIL") << '\n';
    }

    void check(CheckTally& t, bool ok, const std::string& detail)
    {
        ++t.total;
        if (ok) {
            ++t.passed;
            return;
        }
        ++failures_;
        out_ << "MISMATCH " << t.name << ": " << detail << '\n';
    }

    void run_rank(int r)
    {
        const bool brute = r <= config_.brute_cap;
        const auto subsets = all_nonempty_subsets(r);
        PartitionTable direct(r, PartitionTable::Strategy::direct);
        PartitionTable split(r);

        CheckTally interval{"interval-closed-form"};
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j) {
                const auto expected = kostant_q_interval_closed_form(i, j, r);
                const auto root = positive_root(i, j, r);
                check(interval, direct.kostant_q(root) == expected && split.kostant_q(root) == expected,
                      "alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}");
            }
        report(r, interval);

        CheckTally factor{"factorization"};
        CheckTally complement{"complement-runs"};
        CheckTally special{"specialization"};
        for (const auto& set : subsets) {
            const auto spec = to_spec(set);
            check(factor, direct.kostant_q(alpha_of_index_set(set)) == factorize_over_intervals(set),
                  "I=" + spec);
            const int n = static_cast<int>(interval_partition(set).count());
            const bool first = set.contains(1), last = set.contains(r);
            const int expected = first && last ? n - 1 : (first || last ? n : n + 1);
            check(complement, n_of_complement(set) == expected, "I=" + spec);
            check(special, m_classical(set) == (n == 1 ? 1 : 0), "I=" + spec);
        }
        report(r, factor);
        report(r, complement);
        report(r, special);

        CheckTally alt{"altset-identity"};
        CheckTally four{"four-way"};
        for (const auto& set : subsets) {
            const auto spec = to_spec(set);
            const auto closed_set = alt_set_closed(set);
            const auto closed = m_q_closed_general(set);
            const auto via_altset = m_q_altset(set);
            bool ok = via_altset.value == closed && m_q_rank_reduction(set) == closed &&
                      via_altset.terms_evaluated == alt_set_cardinality(set);
            if (brute) {
                const auto lambda = highest_root(r);
                const auto mu = alpha_of_index_set(set);
                const auto found = alt_set_brute(lambda, mu, brute_options(config_));
                check(alt,
                      found == closed_set.elements && found.size() == closed_set.fibonacci_product() &&
                          found.size() == alt_set_cardinality(set),
                      "I=" + spec);
                ok = ok && m_q_brute(lambda, mu, brute_options(config_)).value == closed;
            }
            check(four, ok, "I=" + spec + " closed=" + to_text(closed));
        }
        report(r, alt);
        report(r, four);

        if (brute) {
            CheckTally prior{"prior-results"};
            const auto theta = highest_root(r);
            check(prior, m_q_brute(theta, RootVector(r), brute_options(config_)).value == m_q_closed_zero(r),
                  "mu=0");
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j)
                    check(prior,
                          m_q_brute(theta, positive_root(i, j, r), brute_options(config_)).value ==
                              m_q_closed_positive_root(r, i, j),
                          "mu=alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}");
            report(r, prior);
        }

        CheckTally oracle{"oracle"};
        std::uniform_int_distribution<int> coeff(0, 3);
        for (int s = 0; s < config_.samples; ++s) {
            std::vector<int> c(r);
            int total = 0;
            for (auto& x : c) {
                x = coeff(rng_);
                total += x;
            }
            if (total > config_.oracle_cap)
                continue;
            const RootVector xi(c);
            const auto expected = kostant_q_oracle(xi, config_.oracle_cap);
            check(oracle, split.kostant_q(xi) == expected && direct.kostant_q(xi) == expected,
                  "xi=" + to_json(xi)["coeffs"].dump());
        }
        report(r, oracle);
    }

    void run_large_ranks()
    {
        if (config_.large_rank <= config_.max_rank)
            return;
        CheckTally large{"large-rank"};
        std::uniform_int_distribution<int> rank(config_.max_rank + 1, config_.large_rank);
        std::bernoulli_distribution member(0.5);
        for (int s = 0; s < config_.samples; ++s) {
            const int r = rank(rng_);
            std::vector<int> m;
            for (int i = 1; i <= r; ++i)
                if (member(rng_))
                    m.push_back(i);
            if (m.empty())
                m.push_back(1);
            const IndexSet set(r, m);
            const auto closed = m_q_closed_general(set);
            const auto via_altset = m_q_altset(set);
            check(large,
                  via_altset.value == closed && m_q_rank_reduction(set) == closed &&
                      via_altset.terms_evaluated == alt_set_cardinality(set),
                  "r=" + std::to_string(r) + " I=" + to_spec(set));
        }
        out_ << "ranks " << config_.max_rank + 1 << ".." << config_.large_rank << "  " << large.name
             << std::string(24 - large.name.size(), ' ') << large.passed << '/' << large.total
             << (large.passed == large.total ? "  ok" : "  FAIL") << '\n';
    }

    const RunConfig& config_;
    std::ostream& out_;
    std::mt19937_64 rng_;
    std::uint64_t failures_ = 0;
};

int run_verify(const RunConfig& c, std::ostream& out)
{
    if (c.max_rank < 1)
        throw UsageError("verify: --max-rank must be a positive integer");
    if (c.max_rank > 12)
        throw UsageError("verify: --max-rank is limited to 12 (2^r index sets per rank)");
    return Verifier(c, out).run() ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------------- bench

int run_bench(const RunConfig& c, std::ostream& out)
{
    if (c.max_rank < 1)
        throw UsageError("bench: --max-rank must be a positive integer");
    // The smallest rank at which every index in --mu is valid.
    int start = std::max(c.min_rank, 1);
    for (;; ++start) {
        if (start > c.max_rank)
            throw UsageError("bench: --mu does not fit in any rank up to --max-rank");
        try {
            parse_index_set(c.mu_spec, start);
            break;
        } catch (const UsageError&) {
            if (start >= c.max_rank)
                throw;
        }
    }

    out << "rank,mu,method,terms,micros\n";
    for (int r = start; r <= c.max_rank; ++r) {
        const IndexSet set = parse_index_set(c.mu_spec, r);
        for (Method m : {Method::brute, Method::altset, Method::rank_reduction, Method::closed}) {
            if (m == Method::brute && r > c.brute_cap)
                continue;
            const auto t0 = std::chrono::steady_clock::now();
            const auto result = compute_multiplicity(set, m, brute_options(c));
            const auto t1 = std::chrono::steady_clock::now();
            const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            out << r << ',' << csv_field(to_spec(set)) << ',' << to_string(m) << ','
                << result.terms_evaluated << ',' << micros << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.brute_cap < 1)
            throw UsageError("--brute-cap must be positive");
        if (config.command == "partition")
            return run_partition(config, out);
        if (config.command == "altset")
            return run_altset(config, out);
        if (config.command == "multiplicity")
            return run_multiplicity(config, out, err);
        if (config.command == "verify")
            return run_verify(config, out);
        if (config.command == "bench")
            return run_bench(config, out);
        throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "; raise it with --brute-cap or KWM_BRUTE_CAP\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    if (const char* env = std::getenv("KWM_BRUTE_CAP")) {
        try {
            config.brute_cap = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: KWM_BRUTE_CAP must be an integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Weight q-multiplicities for sl_{r+1} with lambda the highest root", "kwm"};
    app.require_subcommand(1);

    std::string format = "text";
    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--brute-cap", config.brute_cap, "Largest rank for brute-force Weyl sums");
        sub->add_option("--threads", config.threads, "Worker threads for brute-force sums (0: auto)");
    };

    auto* partition = app.add_subcommand("partition", "q-analog of Kostant's partition function");
    partition->add_option("--rank", config.rank, "Rank r")->required();
    partition->add_option("--xi", config.xi_spec, "Simple-root coefficients c1,...,cr")->required();
    partition->add_option("--method", config.method, "dp | oracle")->check(CLI::IsMember({"dp", "oracle"}));
    partition->add_option("--oracle-cap", config.oracle_cap, "Largest sum of |coefficients| for the oracle");
    add_common(partition);

    auto* altset = app.add_subcommand("altset", "Weyl alternation set A(theta, mu)");
    altset->add_option("--rank", config.rank, "Rank r")->required();
    altset->add_option("--mu", config.mu_spec, "Index set like 1,3-5 or coeffs:c1,...,cr")->required();
    altset->add_option("--method", config.method, "brute | closed")->check(CLI::IsMember({"brute", "closed"}));
    altset->add_option("--lambda", config.lambda_spec, "coeffs:c1,...,cr (brute only; default theta)");
    add_common(altset);

    auto* mult = app.add_subcommand("multiplicity", "Weight q-multiplicity m_q(theta, mu)");
    mult->add_option("--rank", config.rank, "Rank r")->required();
    mult->add_option("--mu", config.mu_spec, "Index set like 1,4,7 or coeffs:c1,...,cr")->required();
    mult->add_option("--method", config.method, "brute | altset | reduce | closed | all")
        ->check(CLI::IsMember({"brute", "altset", "reduce", "closed", "all"}));
    mult->add_option("--lambda", config.lambda_spec, "coeffs:c1,...,cr (brute only; default theta)");
    mult->add_option("--factors", config.factors, "Rank-reduction factor source: closed | brute")
        ->check(CLI::IsMember({"closed", "brute"}));
    add_common(mult);

    auto* verify = app.add_subcommand("verify", "Cross-validate every identity up to a rank");
    verify->add_option("--max-rank", config.max_rank, "Largest exhaustive rank")->required();
    verify->add_option("--large-rank", config.large_rank, "Largest rank for randomized altset checks");
    verify->add_option("--samples", config.samples, "Random samples per randomized check");
    verify->add_option("--seed", config.seed, "Seed for randomized checks");
    add_common(verify);

    auto* bench = app.add_subcommand("bench", "CSV of term counts and wall time per method");
    bench->add_option("--max-rank", config.max_rank, "Largest rank")->required();
    bench->add_option("--min-rank", config.min_rank, "Smallest rank");
    bench->add_option("--mu", config.mu_spec, "Index set like 4 or 1,3-5")->required();
    add_common(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        for (auto* sub : app.get_subcommands())
            out << sub->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const auto* parsed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        if (e.get_name() == "CallForHelp") {
            out << parsed->help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = formats.at(format);
    return run(config, out, err);
}

}  // namespace kwm::cli
