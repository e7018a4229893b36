#include <algorithm>
#include <cctype>
#include <charconv>

#include "kwm/cli.hpp"

namespace kwm::cli {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string::size_type start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos)
            return out;
        start = pos + 1;
    }
}

int to_int(const std::string& token, const std::string& context)
{
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw UsageError("malformed " + context + " token '" + token + "'");
    return value;
}

}  // namespace

IndexSet parse_index_set(const std::string& spec, int r)
{
    if (r < 1)
        throw UsageError("rank must be positive");
    if (trim(spec).empty())
        throw UsageError("empty index set");
    std::vector<int> members;
    for (const auto& item : split(spec, ',')) {
        const auto dash = item.find('-', 1);
        int lo, hi;
        if (dash == std::string::npos) {
            lo = hi = to_int(item, "index-set");
        } else {
            lo = to_int(trim(item.substr(0, dash)), "index-set");
            hi = to_int(trim(item.substr(dash + 1)), "index-set");
            if (lo > hi)
                throw UsageError("descending range '" + item + "' in index set");
        }
        if (lo < 1 || hi > r)
            throw UsageError("index set item '" + item + "' outside [1, " + std::to_string(r) + "]");
        for (int k = lo; k <= hi; ++k)
            members.push_back(k);
    }
    return IndexSet(r, std::move(members));
}

RootVector parse_coeffs(const std::string& spec, int r)
{
    if (r < 1)
        throw UsageError("rank must be positive");
    std::vector<int> coeffs;
    for (const auto& token : split(spec, ','))
        coeffs.push_back(to_int(token, "coefficient"));
    if (static_cast<int>(coeffs.size()) != r)
        throw UsageError("expected " + std::to_string(r) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    return RootVector(std::move(coeffs));
}

MuSpec parse_mu(const std::string& spec, int r)
{
    const std::string prefix = "coeffs:";
    if (spec.rfind(prefix, 0) == 0) {
        RootVector weight = parse_coeffs(spec.substr(prefix.size()), r);
        std::optional<IndexSet> set;
        const auto& c = weight.coeffs();
        const bool indicator = std::all_of(c.begin(), c.end(), [](int x) { return x == 0 || x == 1; });
        if (indicator && !weight.is_zero()) {
            std::vector<int> members;
            for (int k = 0; k < r; ++k)
                if (c[k] == 1)
                    members.push_back(k + 1);
            set = IndexSet(r, std::move(members));
        }
        return {std::move(weight), std::move(set)};
    }
    IndexSet set = parse_index_set(spec, r);
    return {alpha_of_index_set(set), set};
}

}  // namespace kwm::cli
