#pragma once

#include <string>
#include <vector>

#include "bethe/tsdata.hpp"

namespace bethe::spectral {

// Dense square matrix of rationals, row-major, 0-based.
class RationalMatrix {
public:
    explicit RationalMatrix(long dim = 0) : dim_(dim), a_(dim * dim) {}
    static RationalMatrix identity(long dim);

    long dim() const { return dim_; }
    Rational& operator()(long i, long j) { return a_[i * dim_ + j]; }
    const Rational& operator()(long i, long j) const { return a_[i * dim_ + j]; }

    bool symmetric() const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    long dim_;
    std::vector<Rational> a_;
};

Rational determinant(const RationalMatrix& m);  // fraction-free (Bareiss)
RationalMatrix invert(const RationalMatrix& m);  // throws on singular input

// One spin species: 2s = two_s, repeated count times.
struct Species {
    long two_s;
    long count;
};

struct ChainSpec {
    std::vector<Species> species;

    long total() const;                 // N = sum 2s_m N_m
    Rational spin_sum() const;          // sum over sites of s_m = N/2
    std::vector<int> composition() const;  // mu: each site's 2s, species order
    Integer dimension() const;          // prod (2s_m + 1)^{N_m}
    std::string str() const;            // "2x5,1x3"
};

// "2sxN[,2sxN...]"; throws ParseError.
ChainSpec parse_chain(const std::string& text);

RationalMatrix build_theta_inverse(const ts::TSData& ts);
RationalMatrix build_E(const ts::TSData& ts);
std::vector<Rational> build_b(const ts::TSData& ts, const ChainSpec& chain, long l);

// Everything needed to evaluate vacancies for one p0, built once.
struct XXZSystem {
    explicit XXZSystem(ts::TSData t);

    ts::TSData ts;
    RationalMatrix theta_inverse, theta, E;
    RationalMatrix E_minus_B;   // E - 2 Theta
    std::vector<int> eps;       // (-1)^{r(j)}, j = 1..dim
    std::vector<long> n;        // n_j, j = 1..dim

    long dim() const { return ts.dim(); }
    std::vector<Rational> tilde(const std::vector<long>& lambda) const;
    // (1/2) lt B lt^t = lt Theta lt^t with lt = tilde(lambda)
    Rational quadratic_form(const std::vector<long>& lambda) const;
};

// ((E - B) tilde(lambda)^t + b^t)_j; subtract lambda_j to get P_j.
std::vector<Rational> vacancy_linear_form(const XXZSystem& sys, const std::vector<Rational>& b,
                                          const std::vector<long>& lambda);
std::vector<Rational> vacancy_linear_form(const ts::TSData& ts, const ChainSpec& chain, long l,
                                          const std::vector<long>& lambda);

// The same linear form over a common denominator, evaluated in machine
// integers. Used by the exhaustive sweeps, where the rational path dominates
// the run time.
class IntegerVacancyForm {
public:
    IntegerVacancyForm(const XXZSystem& sys, const std::vector<Rational>& b);
    // tops_j = P_j + lambda_j; false if some component is not an integer.
    bool tops(const std::vector<long>& lambda, std::vector<long>& out) const;
    // lt Theta lt^t as numerator over theta_den().
    long long quadratic_numerator(const std::vector<long>& lambda) const;
    long long theta_den() const { return theta_den_; }

private:
    long dim_;
    std::vector<int> eps_;
    std::vector<long long> m_, b_, theta_;
    long long den_ = 1, theta_den_ = 1;
};

}  // namespace bethe::spectral
