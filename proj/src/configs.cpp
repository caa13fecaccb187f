#include "bethe/configs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "bethe/errors.hpp"

namespace bethe::configs {

using spectral::ChainSpec;

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

long Partition::multiplicity(int n) const { return std::count(parts.begin(), parts.end(), n); }

std::vector<int> Partition::conjugate() const {
    std::vector<int> c(largest(), 0);
    for (int p : parts)
        for (int k = 0; k < p; ++k) ++c[k];
    return c;
}

long Partition::conjugate_prefix(int n) const {
    long s = 0;
    for (int p : parts) s += std::min(n, p);
    return s;
}

std::vector<int> Partition::distinct_desc() const {
    std::vector<int> d;
    for (int p : parts)
        if (d.empty() || d.back() != p) d.push_back(p);
    return d;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions(long n, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(long, int)> rec = [&](long rem, int cap) {
        if (rem == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = static_cast<int>(std::min<long>(rem, cap)); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, max_part);
    return out;
}

// ---- XXX ----------------------------------------------------------------

long xxx_vacancy(const Partition& nu, const Composition& mu, int n) {
    if (n < 1) throw PreconditionError("xxx_vacancy: n must be >= 1");
    long s = 0;
    for (int m : mu) s += std::min(n, m);
    return s - 2 * nu.conjugate_prefix(n);
}

bool xxx_admissible(const Partition& nu, const Composition& mu) {
    // P_n is constant once n exceeds every part and every mu_k.
    int top = std::max(nu.largest(), mu.empty() ? 0 : *std::max_element(mu.begin(), mu.end()));
    for (int n = 1; n <= std::max(top, 1); ++n)
        if (xxx_vacancy(nu, mu, n) < 0) return false;
    return true;
}

std::vector<Partition> enumerate_xxx_configs(long l, const Composition& mu) {
    if (l < 0) throw PreconditionError("l must be >= 0");
    std::vector<Partition> out;
    for (auto& p : partitions(l, static_cast<int>(l)))
        if (xxx_admissible(p, mu)) out.push_back(std::move(p));
    return out;
}

Integer xxx_config_count(const Partition& nu, const Composition& mu) {
    Integer c = 1;
    for (int n : nu.distinct_desc()) {
        long m = nu.multiplicity(n);
        c *= binomial(xxx_vacancy(nu, mu, n) + m, m);
    }
    return c;
}

Integer count_xxx(long l, const Composition& mu) {
    Integer z = 0;
    for (const auto& nu : enumerate_xxx_configs(l, mu)) z += xxx_config_count(nu, mu);
    return z;
}

std::vector<std::vector<long>> rigging_lists(long k, long bound) {
    std::vector<std::vector<long>> out;
    if (k < 0 || (k > 0 && bound < 0)) return out;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long lo) {
        if (static_cast<long>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (long v = lo; v <= bound; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<XXXRiggedConfig> enumerate_xxx_rigged(long l, const Composition& mu) {
    std::vector<XXXRiggedConfig> out;
    for (const auto& nu : enumerate_xxx_configs(l, mu)) {
        std::vector<XXXRiggedConfig> acc{{nu, {}}};
        for (int n : nu.distinct_desc()) {
            auto lists = rigging_lists(nu.multiplicity(n), xxx_vacancy(nu, mu, n));
            std::vector<XXXRiggedConfig> next;
            for (const auto& partial : acc)
                for (const auto& r : lists) {
                    auto x = partial;
                    x.riggings[n] = r;
                    next.push_back(std::move(x));
                }
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}

// ---- XXZ, integer p0 --------------------------------------------------------

long XXZConfig::l() const {
    long s = lam_p0;
    for (std::size_t j = 0; j < lam.size(); ++j) s += static_cast<long>(j + 1) * lam[j];
    return s;
}

Partition XXZConfig::xxx_part() const {
    std::vector<int> parts;
    for (std::size_t j = lam.size(); j-- > 0;) parts.insert(parts.end(), lam[j], static_cast<int>(j + 1));
    Partition p;
    p.parts = std::move(parts);
    return p;
}

std::vector<long> XXZConfig::full() const {
    auto f = lam;
    f.push_back(lam_p0);
    return f;
}

namespace {

long integer_p0(const ts::TSData& ts) {
    if (!ts.integral() || ts.p0 < 2) throw PreconditionError("this operation needs an integer p0 >= 2");
    return ts.p0.get_num().get_si();
}

long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

std::vector<long> xxz_vacancies_int(const ts::TSData& ts, const ChainSpec& chain, const XXZConfig& cfg) {
    long p0 = integer_p0(ts);
    if (static_cast<long>(cfg.lam.size()) != p0 - 1) throw PreconditionError("configuration has wrong length");
    Composition mu = chain.composition();
    long N = chain.total(), l = cfg.l();
    long fl = floor_div(N - 2 * l, p0);
    long fr_p0 = (N - 2 * l) - fl * p0;  // p0 * frac((N - 2l)/p0)
    Partition nu = cfg.xxx_part();
    std::vector<long> P(p0);
    for (long j = 1; j <= p0 - 2; ++j) {
        long s = 0;
        for (int m : mu) s += std::min<long>(j, m);
        P[j - 1] = s - 2 * nu.conjugate_prefix(static_cast<int>(j)) - j * fl;
    }
    P[p0 - 2] = fr_p0 + fl + cfg.lam_p0;
    P[p0 - 1] = fl + cfg.lam[p0 - 2];
    return P;
}

long xxz_vacancy_int(const ts::TSData& ts, const ChainSpec& chain, const XXZConfig& cfg, long j) {
    auto P = xxz_vacancies_int(ts, chain, cfg);
    if (j < 1 || j > static_cast<long>(P.size())) throw PreconditionError("string index out of range");
    return P[j - 1];
}

std::vector<XXZConfig> xxz_candidates(long p0, long l) {
    std::vector<XXZConfig> out;
    for (long lp = 0; lp <= l; ++lp)
        for (const auto& nu : partitions(l - lp, static_cast<int>(p0 - 1))) {
            XXZConfig c;
            c.lam.assign(p0 - 1, 0);
            for (int part : nu.parts) ++c.lam[part - 1];
            c.lam_p0 = lp;
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end(), [](const XXZConfig& a, const XXZConfig& b) { return a.full() < b.full(); });
    return out;
}

std::vector<XXZConfigCount> enumerate_xxz_int(const ts::TSData& ts, const ChainSpec& chain, long l) {
    long p0 = integer_p0(ts);
    if (l < 0) throw PreconditionError("l must be >= 0");
    std::vector<XXZConfigCount> out;
    for (auto& cfg : xxz_candidates(p0, l)) {
        auto P = xxz_vacancies_int(ts, chain, cfg);
        if (std::any_of(P.begin(), P.end(), [](long v) { return v < 0; })) continue;
        auto lam = cfg.full();
        Integer c = 1;
        for (long j = 0; j < p0; ++j) c *= binomial(P[j] + lam[j], lam[j]);
        out.push_back({std::move(cfg), std::move(P), c});
    }
    return out;
}

std::vector<XXZRiggedConfig> enumerate_xxz_rigged(const ts::TSData& ts, const ChainSpec& chain, const XXZConfig& cfg) {
    auto P = xxz_vacancies_int(ts, chain, cfg);
    std::vector<XXZRiggedConfig> acc;
    if (std::any_of(P.begin(), P.end(), [](long v) { return v < 0; })) return acc;
    acc.push_back({cfg, {}});
    auto lam = cfg.full();
    for (std::size_t j = 0; j < lam.size(); ++j) {
        auto lists = rigging_lists(lam[j], P[j]);
        std::vector<XXZRiggedConfig> next;
        for (const auto& partial : acc)
            for (const auto& r : lists) {
                auto x = partial;
                x.riggings.push_back(r);
                next.push_back(std::move(x));
            }
        acc = std::move(next);
    }
    return acc;
}

// ---- general rational p0 ------------------------------------------------

std::vector<std::vector<long>> enumerate_lambda(const spectral::XXZSystem& sys, long l) {
    if (l < 0) throw PreconditionError("l must be >= 0");
    std::vector<std::vector<long>> out;
    long D = sys.dim();
    std::vector<long> cur(D, 0);
    std::function<void(long, long)> rec = [&](long k, long rem) {
        if (k == D) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (long x = 0; x * sys.n[k] <= rem; ++x) {
            cur[k] = x;
            rec(k + 1, rem - x * sys.n[k]);
        }
        cur[k] = 0;
    };
    rec(0, l);
    return out;
}

std::vector<std::vector<long>> enumerate_lambda(const ts::TSData& ts, long l) {
    return enumerate_lambda(spectral::XXZSystem(ts), l);
}

GeneralCount count_xxz_general_detail(const spectral::XXZSystem& sys, const ChainSpec& chain, long l, bool keep_terms) {
    GeneralCount gc;
    spectral::IntegerVacancyForm form(sys, spectral::build_b(sys.ts, chain, l));
    std::vector<long> tops;
    for (auto& lam : enumerate_lambda(sys, l)) {
        if (!form.tops(lam, tops)) {
            ++gc.skipped_non_integer;
            continue;
        }
        Integer c = 1;
        for (long j = 0; j < sys.dim() && c != 0; ++j) c *= binomial_extended(tops[j], lam[j]);
        if (c == 0) continue;
        gc.total += c;
        if (keep_terms) gc.terms.push_back({lam, std::vector<Integer>(tops.begin(), tops.end()), c});
    }
    return gc;
}

Integer count_xxz_general(const ts::TSData& ts, const ChainSpec& chain, long l) {
    return count_xxz_general_detail(spectral::XXZSystem(ts), chain, l, false).total;
}

// ---- diagrams -------------------------------------------------------------

namespace {

const char* const kClub = "♣";

struct Row {
    int length;
    bool club;
    std::string label;
};

std::string draw(const std::vector<Row>& rows) {
    std::ostringstream os;
    if (rows.empty()) return "(empty)\n";
    int width = rows.front().length;
    for (const auto& r : rows) {
        std::string cells;
        for (int k = 0; k < r.length; ++k) cells += r.club ? std::string("[") + kClub + "]" : "[ ]";
        os << cells;
        if (!r.label.empty()) os << std::string(3 * (width - r.length) + 2, ' ') << r.label;
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_xxz_diagram(const XXZConfig& cfg, const std::vector<long>& vacancies) {
    std::vector<Row> rows;
    for (std::size_t j = cfg.lam.size(); j-- > 0;)
        for (long k = 0; k < cfg.lam[j]; ++k)
            rows.push_back({static_cast<int>(j + 1), false, k == 0 ? std::to_string(vacancies[j]) : ""});
    for (long k = 0; k < cfg.lam_p0; ++k) rows.push_back({1, true, k == 0 ? std::to_string(vacancies.back()) : ""});
    return draw(rows);
}

std::string render_xxx_diagram(const Partition& nu, const Composition& mu) {
    std::vector<Row> rows;
    int last = 0;
    for (int p : nu.parts) {
        rows.push_back({p, false, p != last ? std::to_string(xxx_vacancy(nu, mu, p)) : ""});
        last = p;
    }
    return draw(rows);
}

}  // namespace bethe::configs
