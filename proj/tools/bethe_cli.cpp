// Command-line front end. Exit codes: 0 ok, 1 mismatch (identity,
// completeness, or a failed pairing check), 2 bad input, 3 input outside the
// domain of the requested operation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bethe/bijection.hpp"
#include "bethe/configs.hpp"
#include "bethe/errors.hpp"
#include "bethe/identities.hpp"
#include "bethe/oracle.hpp"

using namespace bethe;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string p0_text, chain_text, cutoff_text = "12";
    std::optional<long> l;
    bool json = false, diagrams = false, experimental = false;

    Rational p0() const {
        if (p0_text.empty()) throw ParseError("--p0 is required");
        Rational r = parse_rational(p0_text);
        if (r < 1) throw ParseError("--p0 must be at least 1, got " + p0_text);
        return r;
    }
    spectral::ChainSpec chain() const {
        if (chain_text.empty()) throw ParseError("--chain is required");
        return spectral::parse_chain(chain_text);
    }
    long level() const {
        if (!l) throw ParseError("--l is required");
        if (*l < 0) throw ParseError("--l must be non-negative");
        return *l;
    }
    Rational cutoff() const {
        Rational c = parse_rational(cutoff_text);
        if (c < 0) throw ParseError("--cutoff must be non-negative");
        return c;
    }
};

json rat(const Rational& r) { return rational_repr(r); }

json num(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

template <class T>
json nums(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Integer>)
            a.push_back(num(x));
        else if constexpr (std::is_same_v<T, Rational>)
            a.push_back(rat(x));
        else
            a.push_back(x);
    }
    return a;
}

json series(const qalg::Terms& t) {
    json a = json::array();
    for (const auto& [e, c] : t) a.push_back(json::array({rat(e), num(c)}));
    return a;
}

json header(const std::string& kind) { return json{{"schema", "v1"}, {"kind", kind}}; }

std::string join(const std::vector<long>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

template <class T>
std::string join_str(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

void emit(const RunConfig& rc, const json& j, const std::string& text) {
    if (rc.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- ts -------------------------------------------------------------------

int cmd_ts(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    json j = header("ts");
    j["p0"] = rat(t.p0);
    j["alpha"] = t.alpha;
    j["nu"] = nums(t.nu);
    j["p"] = nums(t.p);
    j["y"] = nums(t.y_);
    j["z"] = nums(t.z_);
    j["m"] = nums(t.m);
    j["p0_bar"] = t.p0_bar ? rat(*t.p0_bar) : json(nullptr);
    std::ostringstream os;
    os << "p0 = " << t.p0.get_str() << ", alpha = " << t.alpha << "\n";
    os << "nu = (" << join(t.nu) << ")\n";
    os << "p  = (" << join_str(t.p) << ")\n";
    os << "y  = (" << join_str(t.y_) << ")  from y_-1\n";
    os << "z  = (" << join_str(t.z_) << ")  from z_-1\n";
    os << "m  = (" << join(t.m) << ")\n";
    if (t.p0_bar) os << "p0 bar = " << t.p0_bar->get_str() << "\n";
    os << "n_j branches:\n";
    json branches = json::array();
    for (int i = 0; i <= t.alpha + 1; ++i) {
        Rational at = ts::n_on_segment(t, i, t.m[i]);
        Rational slope = ts::n_on_segment(t, i, t.m[i] + 1) - at;
        std::string hi = i <= t.alpha ? std::to_string(t.m[i + 1]) : "inf";
        branches.push_back({{"segment", i},
                            {"from", t.m[i]},
                            {"to", i <= t.alpha ? json(t.m[i + 1]) : json(nullptr)},
                            {"n_at_start", rat(at)},
                            {"slope", rat(slope)},
                            {"parity", i % 2 ? -1 : 1}});
        os << "  " << t.m[i] << " <= j < " << hi << ":  n_j = " << at.get_str() << " + " << slope.get_str()
           << " (j - " << t.m[i] << "), parity " << (i % 2 ? "-" : "+") << "\n";
    }
    j["n_branches"] = branches;
    emit(rc, j, os.str());
    return 0;
}

// ---- theta ------------------------------------------------------------------

json matrix(const spectral::RationalMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.dim(); ++i) {
        json r = json::array();
        for (long k = 0; k < m.dim(); ++k) r.push_back(rat(m(i, k)));
        rows.push_back(r);
    }
    return rows;
}

std::string matrix_text(const spectral::RationalMatrix& m) {
    std::vector<std::string> cells;
    std::size_t w = 1;
    for (long i = 0; i < m.dim(); ++i)
        for (long k = 0; k < m.dim(); ++k) {
            cells.push_back(m(i, k).get_str());
            w = std::max(w, cells.back().size());
        }
    std::string out;
    for (long i = 0; i < m.dim(); ++i) {
        for (long k = 0; k < m.dim(); ++k) {
            const auto& c = cells[i * m.dim() + k];
            out += std::string(w - c.size() + (k ? 1 : 2), ' ') + c;
        }
        out += "\n";
    }
    return out;
}

int cmd_theta(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    auto ti = spectral::build_theta_inverse(t);
    auto th = spectral::invert(ti);
    Rational det = spectral::determinant(ti);
    json j = header("theta");
    j["p0"] = rat(t.p0);
    j["theta_inverse"] = matrix(ti);
    j["theta"] = matrix(th);
    j["det_theta_inverse"] = rat(det);
    j["y_alpha_plus_1"] = num(t.y(t.alpha + 1));
    std::ostringstream os;
    os << "Theta^-1 (p0 = " << t.p0.get_str() << "):\n" << matrix_text(ti);
    os << "Theta:\n" << matrix_text(th);
    os << "det Theta^-1 = " << det.get_str() << ", y_{alpha+1} = " << t.y(t.alpha + 1).get_str() << "\n";
    emit(rc, j, os.str());
    return 0;
}

// ---- count / enumerate --------------------------------------------------------

int cmd_count(const RunConfig& rc) {
    spectral::XXZSystem sys(ts::compute_ts(rc.p0()));
    auto chain = rc.chain();
    long l = rc.level();
    auto g = configs::count_xxz_general_detail(sys, chain, l);
    json j = header("count");
    j["p0"] = rat(sys.ts.p0);
    j["chain"] = chain.str();
    j["l"] = l;
    j["total"] = num(g.total);
    j["skipped_non_integer"] = g.skipped_non_integer;
    json terms = json::array();
    std::ostringstream os;
    os << "Z(p0 = " << sys.ts.p0.get_str() << ", chain " << chain.str() << ", l = " << l << ") = " << g.total.get_str()
       << " from " << g.terms.size() << " summands\n";
    for (const auto& t : g.terms) {
        terms.push_back({{"lambda", nums(t.lambda)}, {"tops", nums(t.tops)}, {"count", num(t.count)}});
        os << "  lambda = (" << join(t.lambda) << ")  tops = (" << join_str(t.tops) << ")  " << t.count.get_str() << "\n";
    }
    if (g.skipped_non_integer) os << "  " << g.skipped_non_integer << " lambdas skipped for non-integer tops\n";
    j["terms"] = terms;
    emit(rc, j, os.str());
    return 0;
}

int cmd_enumerate(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    auto chain = rc.chain();
    long l = rc.level();
    if (!t.integral()) throw PreconditionError("enumerate needs an integer p0; use count for rational p0");
    if (t.p0 < 2) throw PreconditionError("enumerate needs p0 >= 2");
    auto found = configs::enumerate_xxz_int(t, chain, l);
    json j = header("enumerate");
    j["p0"] = rat(t.p0);
    j["chain"] = chain.str();
    j["l"] = l;
    json arr = json::array();
    Integer total = 0;
    std::ostringstream os;
    for (const auto& f : found) {
        total += f.count;
        json e{{"lambda", nums(f.cfg.full())}, {"vacancies", nums(f.vacancies)}, {"count", num(f.count)}};
        if (rc.diagrams) e["diagram"] = configs::render_xxz_diagram(f.cfg, f.vacancies);
        arr.push_back(e);
        os << "lambda = (" << join(f.cfg.full()) << ")  P = (" << join(f.vacancies) << ")  count " << f.count.get_str()
           << "\n";
        if (rc.diagrams) os << configs::render_xxz_diagram(f.cfg, f.vacancies) << "\n";
    }
    os << found.size() << " configurations, total " << total.get_str() << "\n";
    j["configurations"] = arr;
    j["total"] = num(total);
    emit(rc, j, os.str());
    return 0;
}

// ---- identity -----------------------------------------------------------------

json identity_json(const identities::IdentityReport& r) {
    json j{{"name", r.name}, {"cutoff", rat(r.cutoff)}, {"agree", r.agree}};
    if (r.first_discrepancy)
        j["first_discrepancy"] = {{"exponent", rat(r.first_discrepancy->exponent)},
                                  {"lhs", num(r.first_discrepancy->lhs)},
                                  {"rhs", num(r.first_discrepancy->rhs)}};
    else
        j["first_discrepancy"] = nullptr;
    return j;
}

int cmd_identity(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    if (t.p0 < 2) throw PreconditionError("identity needs p0 >= 2");
    Rational cut = rc.cutoff();
    auto lhs = identities::fermionic_sum(spectral::XXZSystem(t), cut);
    std::vector<identities::IdentityReport> reps;
    reps.push_back(identities::compare("fermionic = alternating double sum", t.p0, lhs, identities::bosonic_sum(t, cut)));
    reps.push_back(
        identities::compare("fermionic = resummed sum", t.p0, lhs, identities::bosonic_sum_resummed(t, cut)));
    if (t.integral()) {
        long p0 = t.p0.get_num().get_si();
        auto pr = identities::gordon_andrews_products(p0, cut);
        reps.push_back(identities::compare("fermionic = single alternating sum", t.p0, lhs,
                                           identities::alternating_sum(p0, cut)));
        reps.push_back(identities::compare("fermionic = triple product", t.p0, lhs, pr.triple_product));
        reps.push_back(identities::compare("fermionic = residue product * Euler", t.p0, lhs,
                                           qalg::qs_mul(pr.residue_product, identities::euler_function(cut))));
    }
    bool agree = true;
    json j = header("identity");
    j["p0"] = rat(t.p0);
    j["cutoff"] = rat(cut);
    j["fermionic"] = series(lhs.terms());
    json arr = json::array();
    std::ostringstream os;
    os << "p0 = " << t.p0.get_str() << ", cutoff " << cut.get_str() << "\n";
    os << "fermionic: " << lhs.str() << "\n";
    for (const auto& r : reps) {
        agree = agree && r.agree;
        arr.push_back(identity_json(r));
        os << (r.agree ? "agree     " : "DISAGREE  ") << r.name << " (to q^" << r.cutoff.get_str() << ")";
        if (r.first_discrepancy)
            os << ": first difference at q^" << r.first_discrepancy->exponent.get_str() << ", "
               << r.first_discrepancy->lhs.get_str() << " vs " << r.first_discrepancy->rhs.get_str();
        os << "\n";
    }
    j["comparisons"] = arr;
    j["agree"] = agree;
    emit(rc, j, os.str());
    return agree ? 0 : 1;
}

// ---- completeness -------------------------------------------------------------

json completeness_json(const oracle::CompletenessReport& r) {
    json per = json::array();
    for (const auto& p : r.per_l) per.push_back({{"l", p.l}, {"count", num(p.count)}, {"weight", num(p.weight)}});
    return {{"chain", r.chain.str()},
            {"lhs_total", num(r.lhs_total)},
            {"weighted_sum", num(r.weighted_sum)},
            {"matched", r.matched},
            {"spins_admissible", r.spins_admissible},
            {"skipped_non_integer", r.skipped_non_integer},
            {"per_l", per}};
}

int cmd_completeness(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    if (t.p0 < 2) throw PreconditionError("completeness needs p0 >= 2");
    auto chain = rc.chain();
    auto xxz = oracle::check_completeness_xxz(t, chain);
    auto xxx = oracle::check_completeness_xxx(chain);
    json j = header("completeness");
    j["p0"] = rat(t.p0);
    j["xxz"] = completeness_json(xxz);
    j["xxx"] = completeness_json(xxx);
    std::ostringstream os;
    os << "chain " << chain.str() << ", dimension " << xxz.lhs_total.get_str() << "\n";
    os << "XXZ (p0 = " << t.p0.get_str() << "): sum_l Z = " << xxz.weighted_sum.get_str()
       << (xxz.matched ? "  matched" : "  MISMATCH") << (xxz.spins_admissible ? "" : "  (spin not admissible)") << "\n";
    for (const auto& p : xxz.per_l) os << "  l = " << p.l << ": " << p.count.get_str() << "\n";
    os << "XXX: sum_l (N - 2l + 1) Z = " << xxx.weighted_sum.get_str() << (xxx.matched ? "  matched" : "  MISMATCH")
       << "\n";
    for (const auto& p : xxx.per_l)
        os << "  l = " << p.l << ": " << p.count.get_str() << " x " << p.weight.get_str() << "\n";
    emit(rc, j, os.str());
    return xxz.matched && xxx.matched ? 0 : 1;
}

// ---- bijection ----------------------------------------------------------------

int cmd_bijection(const RunConfig& rc) {
    auto t = ts::compute_ts(rc.p0());
    auto chain = rc.chain();
    auto rep = bijection::verify_pi(t, chain);
    if (!rep.treated_case) {
        json j = header("bijection");
        j["treated_case"] = false;
        j["reason"] = rep.reason;
        if (rc.json)
            std::cout << j.dump(2) << "\n";
        else
            std::cerr << "error: " << rep.reason << "\n";
        return 3;
    }
    json j = header("bijection");
    j["p0"] = rat(t.p0);
    j["chain"] = chain.str();
    j["treated_case"] = true;
    json checks = json::array();
    std::ostringstream os;
    os << "p0 = " << t.p0.get_str() << ", chain " << chain.str() << "\n";
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"counterexamples", c.counterexamples}});
        os << (c.passed ? "pass  " : "FAIL  ") << c.name << " (" << c.checked << " checked)\n";
        for (const auto& e : c.counterexamples) os << "        " << e << "\n";
    }
    j["checks"] = checks;
    json images = json::array();
    os << "pairing:\n";
    for (const auto& im : rep.images) {
        images.push_back({{"nu", im.xxx_config.str()},
                          {"designated_lam_p0", im.designated_lam_p0},
                          {"descendants", im.descendants},
                          {"paired_admissible", im.paired_admissible}});
        os << "  " << im.xxx_config.str() << " -> lambda_p0 = " << im.designated_lam_p0 << ", descendants {"
           << join(im.descendants) << "}\n";
    }
    j["images"] = images;
    j["xxz_total"] = num(rep.xxz_total);
    j["xxx_weighted_total"] = num(rep.xxx_weighted_total);
    j["dimension"] = num(rep.dimension);
    j["beyond_equator"] = rep.beyond_equator;
    j["range_notes"] = rep.range_notes;
    os << "totals: XXZ " << rep.xxz_total.get_str() << ", weighted XXX " << rep.xxx_weighted_total.get_str()
       << ", dimension " << rep.dimension.get_str() << "\n";
    os << rep.beyond_equator << " admissible configurations with l > sum s\n";
    for (const auto& n : rep.range_notes) os << "note: " << n << "\n";
    if (rc.experimental) {
        json census = json::array();
        os << "experimental fiber census (counts only, no state map is asserted):\n";
        for (const auto& f : bijection::experimental_fiber_census(t, chain)) {
            census.push_back({{"nu", f.nu.str()}, {"xxz_states", num(f.xxz_states)}, {"xxx_states", num(f.xxx_states)}});
            os << "  " << f.nu.str() << ": XXZ " << f.xxz_states.get_str() << ", XXX " << f.xxx_states.get_str()
               << (f.xxz_states == f.xxx_states ? "" : "  differs") << "\n";
        }
        j["experimental_fiber_census"] = census;
    }
    j["all_passed"] = rep.all_passed;
    emit(rc, j, os.str());
    return rep.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bethe-state counting for XXX and XXZ spin chains"};
    app.require_subcommand(1);
    RunConfig rc;
    long l_value = 0;

    auto add_common = [&](CLI::App* sub, bool chain, bool level, bool cutoff) {
        sub->add_option("--p0", rc.p0_text, "anisotropy parameter, A or A/B")->required();
        if (chain) sub->add_option("--chain", rc.chain_text, "species 2sxN[,2sxN...]")->required();
        if (level)
            sub->add_option("--l", l_value, "number of down spins")->required();
        if (cutoff) sub->add_option("--cutoff", rc.cutoff_text, "series cutoff, A or A/B")->capture_default_str();
        sub->add_flag("--json", rc.json, "machine-readable output");
    };

    auto* ts_cmd = app.add_subcommand("ts", "continued-fraction data and string lengths");
    add_common(ts_cmd, false, false, false);
    auto* theta_cmd = app.add_subcommand("theta", "Theta^-1, Theta and the determinant");
    add_common(theta_cmd, false, false, false);
    auto* count_cmd = app.add_subcommand("count", "state count from the general formula");
    add_common(count_cmd, true, true, false);
    auto* enum_cmd = app.add_subcommand("enumerate", "admissible configurations, integer p0");
    add_common(enum_cmd, true, true, false);
    enum_cmd->add_flag("--diagrams", rc.diagrams, "draw each configuration");
    auto* id_cmd = app.add_subcommand("identity", "fermionic sum against the bosonic forms");
    add_common(id_cmd, false, false, true);
    auto* comp_cmd = app.add_subcommand("completeness", "state totals against the dimension");
    add_common(comp_cmd, true, false, false);
    auto* bij_cmd = app.add_subcommand("bijection", "checks on the configuration pairing");
    add_common(bij_cmd, true, false, false);
    bij_cmd->add_flag("--experimental-state-map", rc.experimental, "also print per-fiber state counts");

    try {
        app.parse(argc, argv);
        if (*count_cmd || *enum_cmd) rc.l = l_value;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ts_cmd) return cmd_ts(rc);
        if (*theta_cmd) return cmd_theta(rc);
        if (*count_cmd) return cmd_count(rc);
        if (*enum_cmd) return cmd_enumerate(rc);
        if (*id_cmd) return cmd_identity(rc);
        if (*comp_cmd) return cmd_completeness(rc);
        if (*bij_cmd) return cmd_bijection(rc);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
