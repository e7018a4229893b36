#include "kwm/cli.hpp"

namespace kwm::cli {

nlohmann::ordered_json to_json(const QPolynomial& p)
{
    return {{"coeffs", p.coeffs()}};
}

nlohmann::ordered_json to_json(const RootVector& v)
{
    return {{"rank", v.rank()}, {"coeffs", v.coeffs()}};
}

QPolynomial poly_from_json(const nlohmann::json& j)
{
    return QPolynomial(j.at("coeffs").get<std::vector<QPolynomial::Coefficient>>());
}

}  // namespace kwm::cli
