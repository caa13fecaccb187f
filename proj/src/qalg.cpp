#include "bethe/qalg.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "bethe/errors.hpp"

namespace bethe {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits(num, true) || !digits(den, false))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(Integer(n), d);
}

std::string rational_repr(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer binomial(long m, long n) {
    if (n < 0 || n > m) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return r;
}

Integer binomial_extended(const Integer& m, long n) {
    if (n < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace qalg {

namespace {

void accumulate(Terms& t, const Rational& e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = t.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

std::string render(const Terms& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t) {
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str();
        os << "q";
        if (e != 1) os << "^" << (is_integer(e) ? e.get_str() : "(" + e.get_str() + ")");
    }
    return os.str();
}

}  // namespace

QPolynomial QPolynomial::constant(const Integer& c) { return monomial(0, c); }

QPolynomial QPolynomial::monomial(const Rational& e, const Integer& c) {
    QPolynomial p;
    p.add_term(e, c);
    return p;
}

Integer QPolynomial::coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Rational> QPolynomial::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<Rational> QPolynomial::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Integer QPolynomial::at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void QPolynomial::add_term(const Rational& e, const Integer& c) { accumulate(terms_, e, c); }

QPolynomial QPolynomial::shifted(const Rational& e) const {
    QPolynomial r;
    for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, c);
    return r;
}

QPolynomial QPolynomial::inverted() const {
    QPolynomial r;
    for (const auto& [x, c] : terms_) r.terms_.emplace(-x, c);
    return r;
}

QPolynomial QPolynomial::scaled(const Integer& c) const {
    if (c == 0) return {};
    QPolynomial r = *this;
    for (auto& [x, v] : r.terms_) v *= c;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) accumulate(r.terms_, ea + eb, ca * cb);
    return r;
}

std::string QPolynomial::str() const { return render(terms_); }

QSeries::QSeries(const QPolynomial& p, Rational cutoff) : cutoff_(std::move(cutoff)) {
    for (const auto& [e, c] : p.terms())
        if (e <= cutoff_) terms_.emplace(e, c);
}

Integer QSeries::coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Rational> QSeries::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void QSeries::add_term(const Rational& e, const Integer& c) {
    if (e <= cutoff_) accumulate(terms_, e, c);
}

QSeries QSeries::truncated(const Rational& c) const {
    QSeries r(std::min(c, cutoff_));
    for (const auto& [e, v] : terms_) {
        if (e > r.cutoff_) break;
        r.terms_.emplace_hint(r.terms_.end(), e, v);
    }
    return r;
}

QSeries QSeries::shifted(const Rational& e) const {
    QSeries r(cutoff_ + e);
    for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, c);
    return r;
}

QSeries QSeries::scaled(const Integer& c) const {
    QSeries r(cutoff_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [x, v] : r.terms_) v *= c;
    return r;
}

std::string QSeries::str() const { return render(terms_) + " + O(q^" + cutoff_.get_str() + "+)"; }

QSeries qs_add(const QSeries& a, const QSeries& b) {
    QSeries r = a.truncated(std::min(a.cutoff(), b.cutoff()));
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, b.scaled(-1)); }

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    // Unknown terms of a start above a.cutoff; multiplied by b they start above
    // a.cutoff + min(b). An empty series contributes its own cutoff as bound.
    Rational amin = a.min_exponent().value_or(a.cutoff());
    Rational bmin = b.min_exponent().value_or(b.cutoff());
    QSeries r(std::min(a.cutoff() + bmin, b.cutoff() + amin));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Rational e = ea + eb;
            if (e > r.cutoff()) break;
            r.add_term(e, ca * cb);
        }
    return r;
}

QSeries qs_mul(const QSeries& a, const QPolynomial& exact) {
    if (exact.is_zero()) return QSeries(a.cutoff());
    QSeries r(a.cutoff() + *exact.min_exponent());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : exact.terms()) {
            Rational e = ea + eb;
            if (e > r.cutoff()) break;
            r.add_term(e, ca * cb);
        }
    return r;
}

QSeries qs_div_cyclotomic(const QSeries& a, const Rational& step) {
    if (step == 0) throw PreconditionError("qs_div_cyclotomic: zero step");
    if (step < 0) {
        // 1/(1 - q^s) = -q^{-s}/(1 - q^{-s}) for s < 0
        QSeries pos = qs_div_cyclotomic(a, -step);
        QSeries r(a.cutoff());
        for (const auto& [e, c] : pos.terms()) r.add_term(e - step, -c);
        return r;
    }
    QSeries r(a.cutoff());
    for (const auto& [e, c] : a.terms())
        for (Rational x = e; x <= r.cutoff(); x += step) r.add_term(x, c);
    return r;
}

QPolynomial pochhammer(int step_sign, long n) {
    if (n < 0) throw PreconditionError("pochhammer: negative length");
    QPolynomial r = QPolynomial::constant(1);
    for (long i = 1; i <= n; ++i) {
        QPolynomial f = QPolynomial::constant(1);
        f.add_term(Rational(step_sign * i), -1);
        r = r * f;
    }
    return r;
}

const std::vector<Integer>& gauss_coefficients(long M, long N) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::vector<Integer>> cache;
    N = std::min(N, M - N);
    std::lock_guard lock(mu);
    auto key = std::make_pair(M, N);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    // prod_{i=1}^{N} (1 - q^{M-N+i}) / (1 - q^i); every partial product is a
    // polynomial, so each division is exact.
    std::vector<Integer> c{1};
    for (long i = 1; i <= N; ++i) {
        long up = M - N + i;
        std::vector<Integer> next(c.size() + up);
        for (std::size_t e = 0; e < c.size(); ++e) {
            next[e] += c[e];
            next[e + up] -= c[e];
        }
        for (std::size_t e = i; e < next.size(); ++e) next[e] += next[e - i];
        next.resize(next.size() - i);
        c = std::move(next);
    }
    return cache.emplace(key, std::move(c)).first->second;
}

QPolynomial gauss_binomial(long M, long N, int base_sign) {
    if (N < 0 || N > M) return {};
    const auto& c = gauss_coefficients(M, N);
    QPolynomial r;
    for (std::size_t e = 0; e < c.size(); ++e) r.add_term(Rational(base_sign * static_cast<long>(e)), c[e]);
    return r;
}

QPolynomial gauss_binomial_extended(long M, long N, int base_sign) {
    if (N < 0) return {};
    if (M >= 0) return gauss_binomial(M, N, base_sign);
    Rational shift(N * M - N * (N - 1) / 2);
    Integer sign = (N % 2) ? -1 : 1;
    return gauss_binomial(N - M - 1, N, base_sign).shifted(shift * base_sign).scaled(sign);
}

QSeries product_expand(const std::vector<ProductFactor>& factors, const Rational& cutoff) {
    QSeries r(QPolynomial::constant(1), cutoff);
    for (const auto& f : factors) {
        if (f.a <= 0 || f.a + f.b <= 0)
            throw PreconditionError("product_expand: progression " + f.a.get_str() + "n+" + f.b.get_str() +
                                    " has non-positive exponents");
        for (Rational e = f.a + f.b; e <= cutoff; e += f.a) {
            if (f.sign > 0) {
                QSeries next = r;
                for (const auto& [x, c] : r.terms()) next.add_term(x + e, -c);
                r = std::move(next);
            } else {
                r = qs_div_cyclotomic(r, e);
            }
        }
    }
    return r;
}

}  // namespace qalg
}  // namespace bethe
