#pragma once

#include <optional>
#include <string>

#include "bethe/spectral.hpp"

namespace bethe::identities {

using qalg::QPolynomial;
using qalg::QSeries;

struct Discrepancy {
    Rational exponent;
    Integer lhs, rhs;
};

struct IdentityReport {
    std::string name;
    Rational p0;
    Rational cutoff;  // common cutoff actually compared
    QSeries lhs{Rational(0)}, rhs{Rational(0)};
    bool agree = false;
    std::optional<Discrepancy> first_discrepancy;
};

// Compares two truncated series up to the smaller of their cutoffs.
IdentityReport compare(std::string name, const Rational& p0, const QSeries& lhs, const QSeries& rhs);

// q-analog of the state count: sum over lambda of
// q^{lt Theta lt^t} prod_j [top_j choose lambda_j] in base q^{eps_j}.
QPolynomial q_count(const spectral::XXZSystem& sys, const spectral::ChainSpec& chain, long l);
QPolynomial q_count(const ts::TSData& ts, const spectral::ChainSpec& chain, long l);

// V_l = sum_lambda q^{lt Theta lt^t} / prod_j (q^{eps_j}; q^{eps_j})_{lambda_j}.
QSeries v_l(const spectral::XXZSystem& sys, long l, const Rational& cutoff);

QPolynomial Q_km(int sign, long k, long m);
long delta_alpha(int alpha, long k, long m);

// sum_{l >= 0} q^{l^2/p0} V_l
QSeries fermionic_sum(const spectral::XXZSystem& sys, const Rational& cutoff);
// The alternating double sum over k >= m >= 0.
QSeries bosonic_sum(const ts::TSData& ts, const Rational& cutoff);
// The same after summing over m first.
QPolynomial L_k(const ts::TSData& ts, long k);
QSeries bosonic_sum_resummed(const ts::TSData& ts, const Rational& cutoff);

// sum_{m=0}^{k} (-1)^m q^{m(m+1)/2} Q^+_{k,m}; equals (1 + q^k)(q;q)_k.
QPolynomial bracket_sum(long k);

// Integer p0 forms: 1 + sum_k (-1)^k q^{k^2 p0 + k(k-1)/2}(1 + q^k), the
// triple product with modulus 2p0+1, and the product over residues
// n != 0, p0, p0+1 mod 2p0+1 of (1 - q^n)^{-1}.
QSeries alternating_sum(long p0, const Rational& cutoff);
struct ProductForms {
    QSeries triple_product;
    QSeries residue_product;
};
ProductForms gordon_andrews_products(long p0, const Rational& cutoff);
// Euler function (q;q)_infinity to the cutoff.
QSeries euler_function(const Rational& cutoff);

}  // namespace bethe::identities
