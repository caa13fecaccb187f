#include "bethe/tsdata.hpp"

#include "bethe/errors.hpp"

namespace bethe::ts {

TSData compute_ts(const Rational& p0) {
    if (p0 < 1) throw PreconditionError("p0 must be >= 1, got " + p0.get_str());
    TSData t;
    t.p0 = p0;
    t.p = {p0, Rational(1)};
    for (std::size_t i = 0;; ++i) {
        Rational ratio = t.p[i] / t.p[i + 1];
        Integer v = floor_of(ratio);
        t.nu.push_back(v.get_si());
        Rational next = t.p[i] - Rational(v) * t.p[i + 1];
        t.p.push_back(next);
        if (next == 0) break;
    }
    // A floor expansion of a rational only ends in 1 when p0 = 1 itself, so
    // nu_alpha >= 2 holds for alpha > 0 without merging.
    t.alpha = static_cast<int>(t.nu.size()) - 1;

    t.y_ = {0, 1};
    for (int i = 0; i <= t.alpha; ++i) t.y_.push_back(t.y(i - 1) + t.nu[i] * t.y(i));
    t.z_ = {0, 1};
    for (int i = 0; i < t.alpha; ++i) t.z_.push_back(t.z(i - 1) + t.nu[i + 1] * t.z(i));
    t.m = {0};
    for (int i = 0; i <= t.alpha; ++i) t.m.push_back(t.m.back() + t.nu[i]);
    if (t.alpha > 0) t.p0_bar = Rational(t.y(t.alpha), t.z(t.alpha - 1));
    if (t.p0_bar) t.p0_bar->canonicalize();
    return t;
}

int r_of(const TSData& ts, const Rational& j) {
    for (int i = 0; i <= ts.alpha; ++i)
        if (ts.m[i] <= j && j < ts.m[i + 1]) return i;
    return ts.alpha + 1;
}

Rational n_on_segment(const TSData& ts, int i, const Rational& t) {
    return Rational(ts.y(i - 1)) + (t - ts.m[i]) * Rational(ts.y(i));
}

Rational q_on_segment(const TSData& ts, int i, const Rational& t) {
    Rational v = ts.p[i] - (t - ts.m[i]) * ts.p[i + 1];
    return i % 2 ? Rational(-v) : v;
}

Rational n_of(const TSData& ts, const Rational& j) {
    if (j < 0) throw PreconditionError("n_of: negative argument");
    return n_on_segment(ts, r_of(ts, j), j);
}

Rational q_of(const TSData& ts, const Rational& j) {
    if (j < 0 || j >= ts.dim() + 1) throw PreconditionError("q_of: argument " + j.get_str() + " out of domain");
    return q_on_segment(ts, r_of(ts, j), j);
}

namespace {

// Solution of segment i's linear piece = n, if it exists.
Rational solve_segment(const TSData& ts, int i, long n) {
    return Rational(ts.m[i]) + make_rational(Integer(n) - ts.y(i - 1), ts.y(i));
}

}  // namespace

Rational n_inverse(const TSData& ts, long n) {
    if (n <= 1) throw PreconditionError("n_inverse: n must exceed 1");
    std::optional<Rational> first;
    for (int i = 0; i <= ts.alpha + 1; ++i) {
        Rational t = solve_segment(ts, i, n);
        t.canonicalize();
        bool inside = t >= ts.m[i] && (i > ts.alpha || t < ts.m[i + 1]);
        if (!inside) continue;
        if (is_integer(t)) return t;
        if (!first) first = t;
    }
    // The last segment is unbounded with positive slope, so some piece hits n.
    return *first;
}

std::optional<ChiPoint> chi_point(const TSData& ts, long n) {
    for (int i = 0; i <= ts.alpha; ++i) {
        Rational t = solve_segment(ts, i, n);
        t.canonicalize();
        if (t >= ts.m[i] && t <= ts.m[i + 1] && is_integer(t)) return ChiPoint{i, t};
    }
    return std::nullopt;
}

bool admissible_spin(const TSData& ts, long two_s) { return two_s >= 1 && chi_point(ts, two_s + 1).has_value(); }

Rational phi(const TSData& ts, long k, long two_s) {
    if (k < 1 || k > ts.dim()) throw PreconditionError("phi: k out of range");
    if (two_s < 1) throw PreconditionError("phi: 2s must be positive");
    ChiPoint chi;
    if (auto c = chi_point(ts, two_s + 1)) {
        chi = *c;
    } else {
        Rational t = n_inverse(ts, two_s + 1);
        chi = ChiPoint{r_of(ts, t), t};
    }
    Rational n_chi = n_on_segment(ts, chi.segment, chi.t);
    Rational q_chi = q_on_segment(ts, chi.segment, chi.t);
    Rational nk = n_of(ts, k), qk = q_of(ts, k);
    Rational two_p0 = 2 * ts.p0;
    if (nk > two_s) return (qk - qk * n_chi) / two_p0;
    Rational half((r_of(ts, k) - 1) % 2 ? -1 : 1, 2);
    return (qk - q_chi * nk) / two_p0 + half;
}

}  // namespace bethe::ts
