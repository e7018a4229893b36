#include "kwm/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kwm {

namespace detail {

QPolynomial::Coefficient checked_add(QPolynomial::Coefficient a, QPolynomial::Coefficient b)
{
    QPolynomial::Coefficient out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("QPolynomial: coefficient overflow in addition");
    return out;
}

QPolynomial::Coefficient checked_mul(QPolynomial::Coefficient a, QPolynomial::Coefficient b)
{
    QPolynomial::Coefficient out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("QPolynomial: coefficient overflow in multiplication");
    return out;
}

}  // namespace detail

QPolynomial::QPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

QPolynomial::QPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs)
{
    normalize();
}

QPolynomial QPolynomial::constant(Coefficient c)
{
    return QPolynomial(std::vector<Coefficient>{c});
}

QPolynomial QPolynomial::monomial(unsigned degree, Coefficient c)
{
    std::vector<Coefficient> v(degree + 1, 0);
    v[degree] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] = detail::checked_add(coeffs_[k], other.coeffs_[k]);
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        Coefficient out;
        if (__builtin_sub_overflow(coeffs_[k], other.coeffs_[k], &out))
            throw std::overflow_error("QPolynomial: coefficient overflow in subtraction");
        coeffs_[k] = out;
    }
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<QPolynomial::Coefficient> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other)
{
    *this = *this * other;
    return *this;
}

QPolynomial operator-(QPolynomial a)
{
    for (auto& c : a.coeffs_) {
        if (c == INT64_MIN)
            throw std::overflow_error("QPolynomial: coefficient overflow in negation");
        c = -c;
    }
    return a;
}

bool operator<(const QPolynomial& a, const QPolynomial& b)
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(),
                                        b.coeffs_.rbegin(), b.coeffs_.rend());
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
QPolynomial sub(const QPolynomial& a, const QPolynomial& b) { return a - b; }
QPolynomial mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QPolynomial pow(const QPolynomial& base, unsigned exponent)
{
    QPolynomial result = QPolynomial::constant(1);
    QPolynomial square = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= square;
        exponent >>= 1;
        if (exponent > 0)
            square *= square;
    }
    return result;
}

QPolynomial::Coefficient eval_at_one(const QPolynomial& p)
{
    QPolynomial::Coefficient sum = 0;
    for (auto c : p.coeffs())
        sum = detail::checked_add(sum, c);
    return sum;
}

namespace {

// Shared renderer; `latex` switches exponent braces and spacing.
std::string render(const QPolynomial& p, bool latex)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0)
            continue;
        const bool negative = c[k] < 0;
        // Magnitude as unsigned so INT64_MIN prints correctly.
        const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c[k])
                                           : static_cast<std::uint64_t>(c[k]);
        if (first)
            out << (negative ? "-" : "");
        else if (latex)
            out << (negative ? "-" : "+");
        else
            out << (negative ? " - " : " + ");
        first = false;

        if (k == 0) {
            out << mag;
            continue;
        }
        if (mag != 1)
            out << mag;
        out << 'q';
        if (k > 1) {
            if (latex)
                out << "^{" << k << '}';
            else
                out << '^' << k;
        }
    }
    return out.str();
}

}  // namespace

std::string to_text(const QPolynomial& p) { return render(p, false); }
std::string to_latex(const QPolynomial& p) { return render(p, true); }

}  // namespace kwm
