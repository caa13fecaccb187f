#include "bethe/spectral.hpp"

#include <sstream>
#include <stdexcept>

#include "bethe/errors.hpp"

namespace bethe::spectral {

RationalMatrix RationalMatrix::identity(long dim) {
    RationalMatrix m(dim);
    for (long i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::symmetric() const {
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < i; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix r(a.dim_);
    for (long i = 0; i < a.dim_; ++i)
        for (long k = 0; k < a.dim_; ++k) {
            if (a(i, k) == 0) continue;
            for (long j = 0; j < a.dim_; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> r(dim_);
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

namespace {

// Integer matrix L*m, with L the lcm of all denominators.
std::vector<std::vector<Integer>> clear_denominators(const RationalMatrix& m, Integer& L) {
    L = 1;
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), m(i, j).get_den_mpz_t());
    std::vector<std::vector<Integer>> a(m.dim(), std::vector<Integer>(m.dim()));
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) a[i][j] = m(i, j).get_num() * (L / m(i, j).get_den());
    return a;
}

// Fraction-free Gauss-Jordan on the integer rows of a (width >= n). Every
// division by the previous pivot is exact. On return the left n x n block is
// det * I and the returned value is det (0 if singular).
Integer bareiss_jordan(std::vector<std::vector<Integer>>& a, long n) {
    Integer prev = 1;
    int sign = 1;
    std::size_t width = a.empty() ? 0 : a[0].size();
    for (long k = 0; k < n; ++k) {
        long piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (long i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < width; ++j) {
                if (static_cast<long>(j) == k) continue;
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * prev;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
    long n = m.dim();
    if (n == 0) return 1;
    Integer L;
    auto a = clear_denominators(m, L);
    // Plain Bareiss on the square block.
    Integer prev = 1;
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        long piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer Ln;
    mpz_pow_ui(Ln.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(n));
    return make_rational(sign * a[n - 1][n - 1], Ln);
}

RationalMatrix invert(const RationalMatrix& m) {
    long n = m.dim();
    Integer L;
    auto a = clear_denominators(m, L);
    for (long i = 0; i < n; ++i) {
        a[i].resize(2 * n);
        a[i][n + i] = 1;
    }
    (void)bareiss_jordan(a, n);
    if (n > 0 && a[0][0] == 0) throw PreconditionError("invert: singular matrix");
    // Row i reads d_i * e_i | d_i * (L m)^{-1} row i, with d_i the diagonal.
    RationalMatrix r(n);
    for (long i = 0; i < n; ++i) {
        if (a[i][i] == 0) throw PreconditionError("invert: singular matrix");
        for (long j = 0; j < n; ++j) r(i, j) = make_rational(a[i][n + j] * L, a[i][i]);
    }
    if (!(m * r == RationalMatrix::identity(n))) throw std::logic_error("invert: elimination lost exactness");
    return r;
}

long ChainSpec::total() const {
    long t = 0;
    for (const auto& s : species) t += s.two_s * s.count;
    return t;
}

Rational ChainSpec::spin_sum() const { return Rational(total(), 2); }

std::vector<int> ChainSpec::composition() const {
    std::vector<int> mu;
    for (const auto& s : species) mu.insert(mu.end(), s.count, static_cast<int>(s.two_s));
    return mu;
}

Integer ChainSpec::dimension() const {
    Integer d = 1;
    for (const auto& s : species) {
        Integer f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(s.two_s + 1), static_cast<unsigned long>(s.count));
        d *= f;
    }
    return d;
}

std::string ChainSpec::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < species.size(); ++i)
        os << (i ? "," : "") << species[i].two_s << "x" << species[i].count;
    return os.str();
}

ChainSpec parse_chain(const std::string& text) {
    ChainSpec c;
    if (!text.empty() && text.back() == ',') throw ParseError("trailing comma in chain '" + text + "'");
    std::stringstream ss(text);
    std::string item;
    auto number = [&](const std::string& s) {
        if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad chain species '" + item + "' (expected 2sxN)");
        long v = std::stol(s);
        if (v < 1) throw ParseError("chain species entries must be positive in '" + item + "'");
        return v;
    };
    while (std::getline(ss, item, ',')) {
        auto x = item.find_first_of("x*");
        if (x == std::string::npos) throw ParseError("bad chain species '" + item + "' (expected 2sxN)");
        c.species.push_back({number(item.substr(0, x)), number(item.substr(x + 1))});
    }
    if (c.species.empty()) throw ParseError("empty chain");
    return c;
}

RationalMatrix build_theta_inverse(const ts::TSData& ts) {
    long D = ts.dim();
    if (D < 1) throw PreconditionError("theta inverse needs m_{alpha+1} >= 1");
    RationalMatrix c(D);
    for (long j = 1; j <= D; ++j) {
        int i = ts::r_of(ts, j);
        int s = i % 2 ? -1 : 1;  // (-1)^i
        if (j >= 2) c(j - 2, j - 1) = c(j - 1, j - 2) = -s;
        if (j == D)
            c(j - 1, j - 1) = s;  // i = alpha + 1 here
        else
            c(j - 1, j - 1) = j < ts.m[i + 1] - 1 ? 2 * s : s;
    }
    return c;
}

RationalMatrix build_E(const ts::TSData& ts) {
    long D = ts.dim();
    RationalMatrix e(D);
    for (long j = 1; j <= D; ++j)
        for (long k = 1; k <= D; ++k) {
            int d = (j == k) - (j == D - 1 && k == D) + (j == D && k == D - 1);
            e(j - 1, k - 1) = d * ts::epsilon(ts, k);
        }
    return e;
}

std::vector<Rational> build_b(const ts::TSData& ts, const ChainSpec& chain, long l) {
    if (l < 0) throw PreconditionError("build_b: l must be >= 0");
    Rational fr = frac_of(Rational(chain.total() - 2 * l) / ts.p0);
    std::vector<Rational> b(ts.dim());
    for (long j = 1; j <= ts.dim(); ++j) {
        Rational v = ts::n_of(ts, j) * fr;
        for (const auto& sp : chain.species) v -= 2 * ts::phi(ts, j, sp.two_s) * sp.count;
        b[j - 1] = ts::epsilon(ts, j) * v;
    }
    return b;
}

XXZSystem::XXZSystem(ts::TSData t) : ts(std::move(t)) {
    if (ts.p0 == 1) throw PreconditionError("p0 = 1 is not supported for XXZ structures");
    theta_inverse = build_theta_inverse(ts);
    theta = invert(theta_inverse);
    E = build_E(ts);
    E_minus_B = E - theta.scaled(2);
    for (long j = 1; j <= dim(); ++j) {
        eps.push_back(ts::epsilon(ts, j));
        n.push_back(ts::n_of(ts, j).get_num().get_si());
    }
}

std::vector<Rational> XXZSystem::tilde(const std::vector<long>& lambda) const {
    std::vector<Rational> lt(dim());
    for (long j = 0; j < dim(); ++j) lt[j] = eps[j] * lambda[j];
    return lt;
}

Rational XXZSystem::quadratic_form(const std::vector<long>& lambda) const {
    auto lt = tilde(lambda);
    auto tl = theta.apply(lt);
    Rational s = 0;
    for (long j = 0; j < dim(); ++j) s += lt[j] * tl[j];
    return s;
}

std::vector<Rational> vacancy_linear_form(const XXZSystem& sys, const std::vector<Rational>& b,
                                          const std::vector<long>& lambda) {
    if (static_cast<long>(lambda.size()) != sys.dim()) throw PreconditionError("lambda has wrong length");
    for (long v : lambda)
        if (v < 0) throw PreconditionError("lambda entries must be >= 0");
    auto r = sys.E_minus_B.apply(sys.tilde(lambda));
    for (long j = 0; j < sys.dim(); ++j) r[j] += b[j];
    return r;
}

std::vector<Rational> vacancy_linear_form(const ts::TSData& ts, const ChainSpec& chain, long l,
                                          const std::vector<long>& lambda) {
    XXZSystem sys(ts);
    return vacancy_linear_form(sys, build_b(ts, chain, l), lambda);
}

}  // namespace bethe::spectral

namespace bethe::spectral {

namespace {

long long to_ll(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("vacancy form entry exceeds machine range");
    return v.get_si();
}

Integer lcm_of_dens(const std::vector<const Rational*>& xs) {
    Integer L = 1;
    for (auto* x : xs) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x->get_den_mpz_t());
    return L;
}

}  // namespace

IntegerVacancyForm::IntegerVacancyForm(const XXZSystem& sys, const std::vector<Rational>& b)
    : dim_(sys.dim()), eps_(sys.eps) {
    std::vector<const Rational*> all;
    for (long i = 0; i < dim_; ++i) {
        all.push_back(&b[i]);
        for (long j = 0; j < dim_; ++j) all.push_back(&sys.E_minus_B(i, j));
    }
    Integer L = lcm_of_dens(all);
    den_ = to_ll(L);
    for (long i = 0; i < dim_; ++i) {
        b_.push_back(to_ll(Integer(b[i] * L)));
        for (long j = 0; j < dim_; ++j) m_.push_back(to_ll(Integer(sys.E_minus_B(i, j) * L)));
    }
    std::vector<const Rational*> th;
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) th.push_back(&sys.theta(i, j));
    Integer T = lcm_of_dens(th);
    theta_den_ = to_ll(T);
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) theta_.push_back(to_ll(Integer(sys.theta(i, j) * T)));
}

bool IntegerVacancyForm::tops(const std::vector<long>& lambda, std::vector<long>& out) const {
    out.resize(dim_);
    for (long i = 0; i < dim_; ++i) {
        __int128 acc = b_[i];
        for (long j = 0; j < dim_; ++j) acc += static_cast<__int128>(m_[i * dim_ + j]) * eps_[j] * lambda[j];
        if (acc % den_ != 0) return false;
        out[i] = static_cast<long>(acc / den_);
    }
    return true;
}

long long IntegerVacancyForm::quadratic_numerator(const std::vector<long>& lambda) const {
    __int128 acc = 0;
    for (long i = 0; i < dim_; ++i) {
        if (!lambda[i]) continue;
        __int128 row = 0;
        for (long j = 0; j < dim_; ++j) row += static_cast<__int128>(theta_[i * dim_ + j]) * eps_[j] * lambda[j];
        acc += row * eps_[i] * lambda[i];
    }
    return static_cast<long long>(acc);
}

}  // namespace bethe::spectral
