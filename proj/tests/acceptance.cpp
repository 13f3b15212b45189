// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <catpoly/bijections.hpp>
#include <catpoly/closed_forms.hpp>
#include <catpoly/generating_functions.hpp>
#include <catpoly/oracles.hpp>
#include <catpoly/tables.hpp>

#include "oracle_util.hpp"

using namespace catpoly;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            note = what;
        }
        pass = pass && ok;
    }
};

trunc_series drop(trunc_series s, std::initializer_list<var> vars)
{
    for (var x : vars) {
        s = s.eval_one(x);
    }
    return s;
}

outcome counting()
{
    outcome o;
    const auto m = test_oracle::motzkin_numbers(30);
    const auto t0 = clock_type::now();
    for (std::size_t n = 0; n <= 30; ++n) {
        o.require(count(n, word_class::avoid_geq_geq) == m[n] && motzkin(n) == m[n], "count n=" + std::to_string(n));
    }
    o.require(seconds_since(t0) < 1.0, "counting took over 1 s");
    for (std::size_t n = 0; n <= 14; ++n) {
        o.require(enumerate(n, word_class::avoid_geq_geq).size() == m[n].get_ui(), "enumerate n=" + std::to_string(n));
    }
    return o;
}

outcome listed_set()
{
    outcome o;
    std::set<std::string> got;
    for (const auto &w : enumerate(4, word_class::avoid_geq_geq)) {
        got.insert(format_word(w));
    }
    const std::set<std::string> want = {"0010", "0011", "0012", "0101", "0112", "0120", "0121", "0122", "0123"};
    o.require(got == want, "set differs");
    return o;
}

outcome statistics()
{
    outcome o;
    const catalan_word w = parse_word("00123223401011");
    o.require(stat_area(w) == 34 && stat_sper(w) == 22 && stat_inter(w) == 13, "example word");
    const auto t0 = clock_type::now();
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto &u : enumerate(n, word_class::avoid_geq_geq)) {
            const auto g = test_oracle::measure(u.letters());
            o.require(stat_sper(u) == sper_oracle(u) && stat_inter(u) == inter_oracle(u) && stat_area(u) == g.area &&
                          stat_sper(u) == g.sper && stat_inter(u) == g.inter,
                      "word " + format_word(u));
        }
    }
    o.require(seconds_since(t0) < 30.0, "exhaustive check took over 30 s");
    return o;
}

outcome sequences()
{
    outcome o;
    const long want[4][10] = {{0, 1, 4, 12, 34, 94, 258, 707, 1940, 5337},
                              {2, 7, 21, 62, 180, 522, 1512, 4384, 12726, 36995},
                              {1, 5, 19, 66, 218, 701, 2215, 6919, 21438, 66034},
                              {0, 0, 2, 13, 59, 230, 830, 2858, 9547, 31227}};
    const trunc_series got[4] = {gf_h(11), gf_s(11), gf_u(11), gf_p(11)};
    for (int k = 0; k < 4; ++k) {
        for (std::size_t n = 1; n <= 10; ++n) {
            o.require(got[k].coeff(n) == mpoly(want[k][n - 1]), "series " + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    return o;
}

outcome trinomial_closed_forms()
{
    outcome o;
    const trunc_series h = gf_h(31), s = gf_s(31), u = gf_u(31), p = gf_p(31);
    for (unsigned long n = 1; n <= 30; ++n) {
        o.require(h.coeff(n) == mpoly(rational(h_closed(n))) && s.coeff(n) == mpoly(rational(s_closed(n))) &&
                      u.coeff(n) == mpoly(rational(u_closed(n))) && p.coeff(n) == mpoly(rational(p_closed(n))),
                  "series n=" + std::to_string(n));
    }
    using oracle::statistic;
    for (unsigned long n = 1; n <= 12; ++n) {
        o.require(oracle::total(n, statistic::last) == h_closed(n) && oracle::total(n, statistic::sper) == s_closed(n) &&
                      oracle::total(n, statistic::area) == u_closed(n) &&
                      oracle::total(n, statistic::inter) == p_closed(n),
                  "enumeration n=" + std::to_string(n));
    }
    return o;
}

outcome multivariate_masters()
{
    outcome o;
    o.require(master_pqv(11) == oracle::master_pqv(11), "master_pqv histogram");
    o.require(master_interior_qv(11) == oracle::master_interior_qv(11), "interior histogram");
    o.require(cf_C_last(5).coeff(4).coeff(mono_v(2)) == 3, "3v^2");
    o.require(cf_S(5).coeff(4).coeff(mono_p(7)) == 6, "6p^7");
    o.require(prod_area(6).coeff(5).coeff(mono_q(9)) == 5, "5q^9");
    o.require(prod_interior(6).coeff(5).coeff(mono_q(3)) == 5, "5q^3");
    return o;
}

outcome closed_form_vs_fixed_point()
{
    outcome o;
    const trunc_series master = master_pqv(12);
    o.require(cf_S(12) == drop(master, {var::q, var::v}), "S");
    o.require(cf_C_sper_v(12) == drop(master, {var::q}), "Cpv");
    o.require(cf_C_last(12) == drop(master, {var::p, var::q}), "Clast");
    o.require(prod_area(11) == oracle::area(11), "area product");
    o.require(prod_interior(11) == oracle::interior(11), "interior product");
    return o;
}

outcome kernel()
{
    outcome o;
    o.require(kernel_residual(kernel_root_v0(20)).is_zero(), "residual");
    return o;
}

outcome continued_fraction()
{
    outcome o;
    for (std::size_t n = 1; n <= 12; ++n) {
        o.require(cf_B_contfrac(n, n) == sum_B(n), "N=" + std::to_string(n));
    }
    return o;
}

outcome tables()
{
    outcome o;
    const table_set t = build_tables(30);
    const std::vector<std::vector<long>> c = {{1}, {1, 1}, {1, 2, 1}, {2, 3, 3, 1}, {4, 6, 6, 4, 1},
                                              {9, 13, 13, 10, 5, 1}, {21, 30, 30, 24, 15, 6, 1}};
    const std::vector<std::vector<long>> s = {{2}, {3, 4}, {5, 10, 6}, {13, 20, 21, 8}, {33, 50, 51, 36, 10},
                                              {89, 130, 132, 104, 55, 12}};
    const std::vector<std::vector<long>> u = {{1}, {2, 3}, {4, 9, 6}, {12, 20, 24, 10}, {35, 55, 63, 50, 15}};
    const std::vector<std::vector<long>> p = {{0}, {0, 0}, {0, 1, 1}, {1, 3, 6, 3}, {6, 11, 18, 18, 6}};
    const auto match = [&](const tri_table &tab, const std::vector<std::vector<long>> &rows) {
        for (std::size_t n = 1; n <= rows.size(); ++n) {
            for (std::size_t j = 0; j < rows[n - 1].size(); ++j) {
                o.require(tab.at(static_cast<long>(n), static_cast<long>(j) + tab.base()) == rows[n - 1][j],
                          std::string(1, tab.name()) + " row " + std::to_string(n));
            }
        }
    };
    match(t.c, c);
    match(t.s, s);
    match(t.u, u);
    match(t.p, p);
    const auto m = test_oracle::motzkin_numbers(30);
    for (std::size_t n = 1; n <= 30; ++n) {
        o.require(t.c.row_sum(n) == m[n] && t.s.row_sum(n) == s_closed(n) && t.u.row_sum(n) == u_closed(n) &&
                      t.p.row_sum(n) == p_closed(n),
                  "row sums n=" + std::to_string(n));
    }
    return o;
}

outcome bijections()
{
    outcome o;
    const catalan_word fig = parse_word("011201123011");
    const catalan_word img = chi(fig);
    o.require(format_word(img) == "0121012310121", "example image");
    o.require(stat_sper(fig) == 19 && stat_sper(img) == 21, "example semiperimeters");
    for (std::size_t n = 0; n <= 12; ++n) {
        const bijection_report r = verify_bijectivity(n);
        o.require(r.ok() && r.chi_domain == r.chi_target, "n=" + std::to_string(n));
    }
    return o;
}

outcome recurrence_audit(std::string &summary)
{
    outcome o;
    const table_set t = build_tables(10);
    for (auto which : {recurrence::s_base, recurrence::u_base, recurrence::p_base}) {
        const recurrence_report r = check_recurrences(t, which);
        o.require(r == check_recurrences(t, which), "report not deterministic");
        for (const auto &m : r.mismatches) {
            o.require(m.table_value != m.formula_value, "mismatch entry without a difference");
        }
        summary += (summary.empty() ? "" : ", ") + std::string(to_string(which)) + " " +
                   std::to_string(r.mismatches.size()) + "/" + std::to_string(r.checked) + " cells differ";
    }
    return o;
}

outcome asymptotics(std::string &summary)
{
    outcome o;
    const double near[4] = {ratio_to(h_closed(50), asym_h(50)), ratio_to(s_closed(50), asym_s(50)),
                            ratio_to(u_closed(50), asym_up(50)), ratio_to(p_closed(50), asym_up(50))};
    const double far[4] = {ratio_to(h_closed(300), asym_h(300)), ratio_to(s_closed(300), asym_s(300)),
                           ratio_to(u_closed(300), asym_up(300)), ratio_to(p_closed(300), asym_up(300))};
    const char *names = "hsup";
    for (int k = 0; k < 4; ++k) {
        o.require(far[k] >= 0.85 && far[k] <= 1.15, std::string(1, names[k]) + " outside band");
        o.require(std::abs(far[k] - 1) < std::abs(near[k] - 1), std::string(1, names[k]) + " not closer");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%c %.3f", k ? ", " : "", names[k], far[k]);
        summary += buf;
    }
    return o;
}

outcome end_to_end(std::string &summary)
{
    outcome o;
    const std::string cmd = std::string("\"") + CATPOLY_CLI_PATH + "\" verify --max-n 10 --max-order 20 > /dev/null";
    const auto t0 = clock_type::now();
    const int status = std::system(cmd.c_str());
    const double secs = seconds_since(t0);
    o.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0, "verify did not exit 0");
    o.require(secs < 120.0, "verify took over 2 minutes");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    summary = buf;
    return o;
}

} // namespace

int main()
{
    std::string audit, asym, e2e;
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria = {
        {"counting equals Motzkin numbers", counting},
        {"length-4 word set", listed_set},
        {"statistics and geometric oracles", statistics},
        {"printed total sequences", sequences},
        {"trinomial closed forms", trinomial_closed_forms},
        {"multivariate master series", multivariate_masters},
        {"closed forms vs fixed point", closed_form_vs_fixed_point},
        {"kernel root", kernel},
        {"continued fraction", continued_fraction},
        {"tables", tables},
        {"bijections", bijections},
        {"recurrence audit", [&] { return recurrence_audit(audit); }},
        {"asymptotics", [&] { return asymptotics(asym); }},
        {"end-to-end verify", [&] { return end_to_end(e2e); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::string extra = i == 11 ? audit : i == 12 ? asym : i == 13 ? e2e : "";
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.note.empty()) {
            std::cout << " (" << o.note << ")";
        }
        if (!extra.empty()) {
            std::cout << " [" << extra << "]";
        }
        std::cout << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
