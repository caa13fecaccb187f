#pragma once

#include <optional>
#include <vector>

#include "bethe/qalg.hpp"

namespace bethe::ts {

// Continued-fraction data of p0 = [nu_0, ..., nu_alpha]. Sequences indexed
// from -1 (y, z) are stored with an offset of one; use the accessors.
struct TSData {
    Rational p0;
    int alpha = 0;
    std::vector<long> nu;      // nu_0..nu_alpha
    std::vector<Rational> p;   // p_0..p_{alpha+2}
    std::vector<Integer> y_;   // y_{-1}..y_{alpha+1}
    std::vector<Integer> z_;   // z_{-1}..z_alpha
    std::vector<long> m;       // m_0..m_{alpha+1}
    std::optional<Rational> p0_bar;  // [nu_0..nu_{alpha-1}] = y_alpha / z_{alpha-1}, alpha > 0

    const Integer& y(int i) const { return y_.at(i + 1); }
    const Integer& z(int i) const { return z_.at(i + 1); }
    long dim() const { return m.back(); }  // m_{alpha+1}
    bool integral() const { return p0.get_den() == 1; }
};

TSData compute_ts(const Rational& p0);

// Segment index r(j): i with m_i <= j < m_{i+1}, alpha+1 past the end.
int r_of(const TSData& ts, const Rational& j);
inline int epsilon(const TSData& ts, long j) { return r_of(ts, j) % 2 ? -1 : 1; }

// Linear pieces of n_j and q_j on segment i, valid for any rational t.
Rational n_on_segment(const TSData& ts, int i, const Rational& t);
Rational q_on_segment(const TSData& ts, int i, const Rational& t);

Rational n_of(const TSData& ts, const Rational& j);
Rational q_of(const TSData& ts, const Rational& j);

// The t with n_of(t) = n on half-open segments: the first integer solution if
// any, otherwise the first rational one.
Rational n_inverse(const TSData& ts, long n);

// Argument used for Phi: the first integer point t of a closed segment
// [m_i, m_{i+1}] (i <= alpha) where segment i's piece takes the value n.
// Absent when n is not an admissible string length, see admissible_spin.
struct ChiPoint {
    int segment;
    Rational t;
};
std::optional<ChiPoint> chi_point(const TSData& ts, long n);

// Spin 2s is admissible for p0 when 2s+1 is reached at such an integer point.
bool admissible_spin(const TSData& ts, long two_s);

Rational phi(const TSData& ts, long k, long two_s);

}  // namespace bethe::ts
