#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kwm {

// Dense polynomial in one formal variable q with signed 64-bit coefficients.
//
// Canonical form: the coefficient vector is empty for the zero polynomial and
// otherwise ends in a nonzero entry. Every constructor and operator
// normalizes, so equality is plain vector equality.
//
// Coefficient bound: every polynomial computed here is a signed sum of at most
// (r+1)! partition values, each of which is at most the number of multisets of
// positive roots summing to the highest root, i.e. 2^(r-1). For r <= 12 this
// stays below 13! * 2^11 < 2^44. All arithmetic is overflow-checked and throws
// std::overflow_error rather than wrapping.
class QPolynomial {
public:
    using Coefficient = std::int64_t;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<Coefficient> coeffs);
    QPolynomial(std::initializer_list<Coefficient> coeffs);

    static QPolynomial constant(Coefficient c);
    static QPolynomial monomial(unsigned degree, Coefficient c = 1);
    static QPolynomial q() { return monomial(1); }

    // Lowest degree first; empty for zero.
    const std::vector<Coefficient>& coeffs() const { return coeffs_; }
    Coefficient coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator-=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(QPolynomial a);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    // Total order (by degree, then coefficients from the top) so polynomials
    // can key ordered containers.
    friend bool operator<(const QPolynomial& a, const QPolynomial& b);

private:
    void normalize();

    std::vector<Coefficient> coeffs_;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial sub(const QPolynomial& a, const QPolynomial& b);
QPolynomial mul(const QPolynomial& a, const QPolynomial& b);
QPolynomial pow(const QPolynomial& base, unsigned exponent);

// Sum of the coefficients: specializes q to 1.
QPolynomial::Coefficient eval_at_one(const QPolynomial& p);

// Descending powers, e.g. "q^3 - q^2 + 2q + 1"; "0" for zero.
std::string to_text(const QPolynomial& p);
// Descending powers, e.g. "q^{3}-q^{2}".
std::string to_latex(const QPolynomial& p);

namespace detail {
QPolynomial::Coefficient checked_add(QPolynomial::Coefficient a, QPolynomial::Coefficient b);
QPolynomial::Coefficient checked_mul(QPolynomial::Coefficient a, QPolynomial::Coefficient b);
}  // namespace detail

}  // namespace kwm
