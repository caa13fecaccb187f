#include "bethe/identities.hpp"

#include <algorithm>

#include "bethe/configs.hpp"
#include "bethe/errors.hpp"
#include "bethe/parallel.hpp"

namespace bethe::identities {

using qalg::qs_div_cyclotomic;

IdentityReport compare(std::string name, const Rational& p0, const QSeries& lhs, const QSeries& rhs) {
    IdentityReport r;
    r.name = std::move(name);
    r.p0 = p0;
    r.cutoff = std::min(lhs.cutoff(), rhs.cutoff());
    r.lhs = lhs.truncated(r.cutoff);
    r.rhs = rhs.truncated(r.cutoff);
    r.agree = r.lhs.terms() == r.rhs.terms();
    if (!r.agree) {
        // Walk the union of exponents in increasing order.
        auto a = r.lhs.terms().begin(), b = r.rhs.terms().begin();
        auto ae = r.lhs.terms().end(), be = r.rhs.terms().end();
        while (a != ae || b != be) {
            Rational e = (b == be || (a != ae && a->first < b->first)) ? a->first : b->first;
            Integer x = r.lhs.coeff(e), y = r.rhs.coeff(e);
            if (x != y) {
                r.first_discrepancy = Discrepancy{e, x, y};
                break;
            }
            if (a != ae && a->first == e) ++a;
            if (b != be && b->first == e) ++b;
        }
    }
    return r;
}

namespace {

// Integer-exponent Laurent polynomial: sum_i c[i] q^{offset + i}.
struct Dense {
    long offset = 0;
    std::vector<Integer> c;
};

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense r;
    r.offset = a.offset + b.offset;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

// [M choose N] in base q^{eps}, extended to M < 0; empty when zero.
std::optional<Dense> dense_gauss(long M, long N, int eps) {
    if (N < 0 || (M >= 0 && N > M)) return std::nullopt;
    long shift = 0;
    int sign = 1;
    if (M < 0) {
        shift = N * M - N * (N - 1) / 2;
        sign = N % 2 ? -1 : 1;
        M = N - M - 1;
    }
    const auto& g = qalg::gauss_coefficients(M, N);
    Dense d;
    d.c = g;
    if (sign < 0)
        for (auto& x : d.c) x = -x;
    if (eps < 0) {
        std::reverse(d.c.begin(), d.c.end());
        d.offset = -static_cast<long>(g.size() - 1);
    }
    d.offset += eps * shift;
    return d;
}

}  // namespace

QPolynomial q_count(const spectral::XXZSystem& sys, const spectral::ChainSpec& chain, long l) {
    spectral::IntegerVacancyForm form(sys, spectral::build_b(sys.ts, chain, l));
    long long den = form.theta_den();
    std::map<long long, Integer> acc;  // exponent numerator over den
    std::vector<long> tops;
    for (const auto& lam : configs::enumerate_lambda(sys, l)) {
        if (!form.tops(lam, tops)) continue;
        Dense prod{0, {1}};
        bool zero = false;
        for (long j = 0; j < sys.dim() && !zero; ++j) {
            auto g = dense_gauss(tops[j], lam[j], sys.eps[j]);
            if (!g)
                zero = true;
            else
                prod = dense_mul(prod, *g);
        }
        if (zero) continue;
        long long base = form.quadratic_numerator(lam);
        for (std::size_t i = 0; i < prod.c.size(); ++i)
            if (prod.c[i] != 0) acc[base + (prod.offset + static_cast<long long>(i)) * den] += prod.c[i];
    }
    QPolynomial r;
    for (const auto& [num, c] : acc) r.add_term(make_rational(static_cast<long>(num), static_cast<long>(den)), c);
    return r;
}

QPolynomial q_count(const ts::TSData& ts, const spectral::ChainSpec& chain, long l) {
    return q_count(spectral::XXZSystem(ts), chain, l);
}

namespace {

struct LambdaTerm {
    std::vector<long> lambda;
    Rational lead;  // exact leading exponent of the term
    Rational shift;
};

// The lambda summands of q^{extra} V_l, with their leading exponents.
std::vector<LambdaTerm> v_terms(const spectral::XXZSystem& sys, long l, const Rational& extra,
                                const spectral::IntegerVacancyForm& form) {
    std::vector<LambdaTerm> out;
    for (auto& lam : configs::enumerate_lambda(sys, l)) {
        Rational shift = extra + make_rational(static_cast<long>(form.quadratic_numerator(lam)), static_cast<long>(form.theta_den()));
        long neg = 0;
        for (long j = 0; j < sys.dim(); ++j)
            if (sys.eps[j] < 0) neg += lam[j] * (lam[j] + 1) / 2;
        out.push_back({std::move(lam), shift + neg, shift});
    }
    return out;
}

void add_v_term(QSeries& acc, const spectral::XXZSystem& sys, const LambdaTerm& t) {
    QSeries s(QPolynomial::monomial(t.shift), acc.cutoff());
    for (long j = 0; j < sys.dim(); ++j)
        for (long i = 1; i <= t.lambda[j]; ++i) s = qs_div_cyclotomic(s, Rational(sys.eps[j] * i));
    for (const auto& [e, c] : s.terms()) acc.add_term(e, c);
}

spectral::IntegerVacancyForm theta_form(const spectral::XXZSystem& sys) {
    // Only the quadratic part is used, so the b vector is irrelevant.
    return spectral::IntegerVacancyForm(sys, std::vector<Rational>(sys.dim()));
}

}  // namespace

QSeries v_l(const spectral::XXZSystem& sys, long l, const Rational& cutoff) {
    if (l < 0) throw PreconditionError("l must be >= 0");
    auto form = theta_form(sys);
    QSeries acc(cutoff);
    for (const auto& t : v_terms(sys, l, 0, form))
        if (t.lead <= cutoff) add_v_term(acc, sys, t);
    return acc;
}

QPolynomial Q_km(int sign, long k, long m) {
    if (!(k >= m && m >= 0)) throw PreconditionError("Q_km needs k >= m >= 0");
    QPolynomial a = qalg::gauss_binomial(k - 1, m);
    QPolynomial b = qalg::gauss_binomial(k - 1, m - 1);
    if (sign > 0) return a + b.shifted(2 * k - m);
    return a.shifted(k + m) + b;
}

long delta_alpha(int alpha, long k, long m) {
    auto c2 = [](long x) { return x * (x - 1) / 2; };
    return alpha % 2 == 0 ? c2(k - m) : c2(m);
}

QSeries fermionic_sum(const spectral::XXZSystem& sys, const Rational& cutoff) {
    auto form = theta_form(sys);
    long window = std::max<long>(1, sys.ts.p0.get_num().get_si());
    QSeries total(cutoff);
    long quiet = 0;  // consecutive l whose leading exponent is above the cutoff
    for (long l0 = 0; quiet < window; l0 += window) {
        auto parts = parallel_map(window, [&](std::size_t i) {
            long l = l0 + static_cast<long>(i);
            Rational extra = Rational(l * l) / sys.ts.p0;
            auto terms = v_terms(sys, l, extra, form);
            std::optional<Rational> lead;
            QSeries acc(cutoff);
            for (const auto& t : terms) {
                if (!lead || t.lead < *lead) lead = t.lead;
                if (t.lead <= cutoff) add_v_term(acc, sys, t);
            }
            return std::make_pair(lead.value_or(cutoff + 1), acc);
        });
        for (auto& [lead, acc] : parts) {
            if (quiet >= window) break;
            quiet = lead > cutoff ? quiet + 1 : 0;
            total = qalg::qs_add(total, acc);
        }
    }
    return total;
}

namespace {

// sign * q^e * poly / (q;q)_k, truncated.
QSeries over_pochhammer(const QPolynomial& poly, long k, const Rational& cutoff) {
    QSeries s(poly, cutoff);
    for (long i = 1; i <= k; ++i) s = qs_div_cyclotomic(s, Rational(i));
    return s;
}

}  // namespace

QSeries bosonic_sum(const ts::TSData& ts, const Rational& cutoff) {
    int a = ts.alpha;
    int sigma = a % 2 ? -1 : 1;
    Integer Y1 = ts.y(a + 1), Y0 = ts.y(a), Z0 = ts.z(a), Zm = ts.z(a - 1);
    auto expo = [&](long k, long m) -> Rational {
        return Rational(Integer((k * Y1 + m * Y0) * (k * Z0 + m * Zm))) + delta_alpha(a, k, m);
    };
    QSeries total(QPolynomial::constant(1), cutoff);
    for (long k = 1; expo(k, 0) <= cutoff || expo(k, k) <= cutoff; ++k) {
        auto terms = parallel_map(k + 1, [&](std::size_t mi) {
            long m = static_cast<long>(mi);
            Rational e = expo(k, m);
            if (e > cutoff) return QSeries(cutoff);
            long sgn_exp = (sigma > 0 ? k : 0) + m;
            QPolynomial poly = Q_km(sigma, k, m).shifted(e).scaled(sgn_exp % 2 ? -1 : 1);
            return over_pochhammer(poly, k, cutoff);
        });
        for (const auto& t : terms) total = qalg::qs_add(total, t);
    }
    return total;
}

QPolynomial L_k(const ts::TSData& ts, long k) {
    if (k < 1) throw PreconditionError("L_k needs k >= 1");
    int a = ts.alpha;
    int sigma = a % 2 ? -1 : 1;
    Integer Y1 = ts.y(a + 1), Y0 = ts.y(a), Z0 = ts.z(a), Zm = ts.z(a - 1);
    QPolynomial r;
    for (long m = 0; m <= k; ++m) {
        Integer e = m * m * Y0 * Zm - k * m * (Y1 * Zm + 2 * Y0 * Zm + Y0 * Z0) + delta_alpha(a, k, k - m);
        r += Q_km(sigma, k, k - m).shifted(Rational(e)).scaled(m % 2 ? -1 : 1);
    }
    return r;
}

QSeries bosonic_sum_resummed(const ts::TSData& ts, const Rational& cutoff) {
    int a = ts.alpha;
    Integer Y1 = ts.y(a + 1), Y0 = ts.y(a), Z0 = ts.z(a), Zm = ts.z(a - 1);
    QSeries total(QPolynomial::constant(1), cutoff);
    for (long k = 1;; ++k) {
        Integer pre = k * k * (Y1 + Y0) * (Z0 + Zm);
        QPolynomial poly = L_k(ts, k).shifted(Rational(pre));
        if (a % 2) poly = poly.scaled(k % 2 ? -1 : 1);
        bool above = poly.is_zero() || *poly.min_exponent() > cutoff;
        // k^2 y_{alpha+1} z_alpha bounds every later leading exponent from below.
        if (above && Rational(Integer(k * k * Y1 * Z0)) > cutoff) break;
        if (!above) total = qalg::qs_add(total, over_pochhammer(poly, k, cutoff));
    }
    return total;
}

QPolynomial bracket_sum(long k) {
    if (k < 1) throw PreconditionError("bracket_sum needs k >= 1");
    QPolynomial r;
    for (long m = 0; m <= k; ++m) r += Q_km(+1, k, m).shifted(m * (m + 1) / 2).scaled(m % 2 ? -1 : 1);
    return r;
}

QSeries alternating_sum(long p0, const Rational& cutoff) {
    QSeries r(QPolynomial::constant(1), cutoff);
    for (long k = 1; k * k * p0 + k * (k - 1) / 2 <= cutoff; ++k) {
        long e = k * k * p0 + k * (k - 1) / 2;
        Integer s = k % 2 ? -1 : 1;
        r.add_term(e, s);
        r.add_term(e + k, s);
    }
    return r;
}

ProductForms gordon_andrews_products(long p0, const Rational& cutoff) {
    if (p0 < 2) throw PreconditionError("product forms need an integer p0 >= 2");
    long M = 2 * p0 + 1;
    std::vector<qalg::ProductFactor> triple{{+1, M, 0}, {+1, M, -p0 - 1}, {+1, M, -p0}};
    std::vector<qalg::ProductFactor> residues;
    for (long r = 1; r < M; ++r)
        if (r != p0 && r != p0 + 1) residues.push_back({-1, M, r - M});
    return {qalg::product_expand(triple, cutoff), qalg::product_expand(residues, cutoff)};
}

QSeries euler_function(const Rational& cutoff) { return qalg::product_expand({{+1, 1, 0}}, cutoff); }

}  // namespace bethe::identities
