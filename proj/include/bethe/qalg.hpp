#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bethe {

using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: gcd(num, den) = 1, den > 0

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "A", "A/B" (with optional sign on A). Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "num/den", also for integers; used for machine-readable output.
std::string rational_repr(const Rational& r);

Integer floor_of(const Rational& r);
Rational frac_of(const Rational& r);  // r - floor(r), in [0, 1)
bool is_integer(const Rational& r);

// Ordinary binomial, 0 unless 0 <= n <= m.
Integer binomial(long m, long n);
// Generalised binomial m(m-1)...(m-n+1)/n! for any integer m, n >= 0.
Integer binomial_extended(const Integer& m, long n);

namespace qalg {

using Terms = std::map<Rational, Integer>;

// Finite Laurent polynomial in q with rational exponents, exact.
class QPolynomial {
public:
    QPolynomial() = default;
    static QPolynomial constant(const Integer& c);
    static QPolynomial monomial(const Rational& e, const Integer& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(const Rational& e) const;
    std::optional<Rational> min_exponent() const;
    std::optional<Rational> max_exponent() const;
    Integer at_one() const;  // value at q = 1

    void add_term(const Rational& e, const Integer& c);
    QPolynomial shifted(const Rational& e) const;   // times q^e
    QPolynomial inverted() const;                    // q -> q^{-1}
    QPolynomial scaled(const Integer& c) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(const QPolynomial& a) { return a.scaled(-1); }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

// Truncated series: every stored exponent is <= cutoff, and coefficients above
// the cutoff are unknown.
class QSeries {
public:
    explicit QSeries(Rational cutoff) : cutoff_(std::move(cutoff)) {}
    QSeries(const QPolynomial& p, Rational cutoff);

    const Terms& terms() const { return terms_; }
    const Rational& cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(const Rational& e) const;
    std::optional<Rational> min_exponent() const;

    void add_term(const Rational& e, const Integer& c);
    QSeries truncated(const Rational& c) const;  // lowers the cutoff
    QSeries shifted(const Rational& e) const;    // times q^e, cutoff moves too
    QSeries scaled(const Integer& c) const;

    std::string str() const;
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

private:
    Terms terms_;
    Rational cutoff_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QPolynomial& exact);
QSeries qs_div_cyclotomic(const QSeries& a, const Rational& step);

// prod_{i=1}^{n} (1 - x^i), x = q^{step_sign}
QPolynomial pochhammer(int step_sign, long n);

// [M choose N] in base x = q^{base_sign}; zero unless 0 <= N <= M.
QPolynomial gauss_binomial(long M, long N, int base_sign = 1);
// Same, but for M < 0 uses the reflection
// [M choose N] = (-1)^N x^{NM - N(N-1)/2} [N-M-1 choose N], which reduces to
// the generalised binomial at q = 1.
QPolynomial gauss_binomial_extended(long M, long N, int base_sign = 1);

// Dense coefficients c_0..c_{N(M-N)} of [M choose N]_q, 0 <= N <= M. The
// reference stays valid for the life of the process.
const std::vector<Integer>& gauss_coefficients(long M, long N);

struct ProductFactor {
    int sign;     // +1: (1 - q^{an+b}), -1: 1/(1 - q^{an+b})
    Rational a;
    Rational b;
};
// prod over factors of prod_{n>=1} (1 - q^{a n + b})^{sign}, to the cutoff.
QSeries product_expand(const std::vector<ProductFactor>& factors, const Rational& cutoff);

}  // namespace qalg
}  // namespace bethe
