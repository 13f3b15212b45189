#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bijections.hpp"
#include "closed_forms.hpp"
#include "generating_functions.hpp"
#include "tables.hpp"
#include "verify.hpp"
#include "words.hpp"

namespace catpoly::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2, limit_exceeded = 3 };

inline constexpr std::size_t default_series_limit = 40;

using ordered_json = nlohmann::ordered_json;

inline std::string display_word(const catalan_word &w)
{
    return w.empty() ? "ε" : format_word(w);
}

// ---------------------------------------------------------------------------
// enumerate / stats

/// word, length, area, sper, inter, last; statistics undefined on ε are null.
inline ordered_json word_record(const catalan_word &w)
{
    ordered_json j;
    j["word"] = display_word(w);
    j["length"] = w.size();
    j["area"] = stat_area(w);
    if (w.empty()) {
        j["sper"] = nullptr;
        j["inter"] = nullptr;
        j["last"] = nullptr;
    } else {
        j["sper"] = stat_sper(w);
        j["inter"] = stat_inter(w);
        j["last"] = stat_last(w);
    }
    return j;
}

inline std::string csv_field(const ordered_json &v)
{
    return v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
}

struct enumerate_options {
    std::size_t length = 0;
    word_class cls = word_class::avoid_geq_geq;
    std::string format = "text";
    std::size_t limit = default_enumeration_limit;
};

inline int cmd_enumerate(const enumerate_options &o, std::ostream &out)
{
    if (o.format == "csv") {
        out << "word,length,area,sper,inter,last\r\n";
    }
    for_each_word(o.length, o.cls, [&](const catalan_word &w) {
        if (o.format == "text") {
            out << display_word(w) << '\n';
            return;
        }
        const ordered_json rec = word_record(w);
        if (o.format == "json") {
            out << rec.dump() << '\n';
        } else {
            std::string sep;
            for (const auto &[key, value] : rec.items()) {
                out << sep << csv_field(value);
                sep = ",";
            }
            out << "\r\n";
        }
    }, o.limit);
    return ok;
}

inline int cmd_stats(const std::string &word, const std::string &format, std::ostream &out)
{
    const catalan_word w = parse_word(word);
    if (w.empty()) {
        throw empty_word();
    }
    const stat_record r = stats(w);
    if (format == "json") {
        out << word_record(w).dump() << '\n';
    } else {
        out << "word=" << format_word(w) << " length=" << r.length << " area=" << r.area << " sper=" << r.sper
            << " inter=" << r.inter << " last=" << r.last << '\n';
    }
    return ok;
}

// ---------------------------------------------------------------------------
// render

/// Cells are 3x1 character boxes; lattice points that are interior points of
/// the polyomino are drawn as '*' instead of '+'.
inline std::string render_ascii(const catalan_word &w, bool mark_interior)
{
    const polyomino poly(w);
    const long W = static_cast<long>(poly.width());
    const long H = poly.max_height();
    if (W == 0) {
        return "";
    }
    std::vector<std::string> grid(static_cast<std::size_t>(2 * H + 1), std::string(static_cast<std::size_t>(4 * W + 1), ' '));
    const auto put = [&](long x, long row, char ch) {
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(x)] = ch;
    };
    for (long c = 0; c < W; ++c) {
        for (long r = 0; r < poly.heights()[static_cast<std::size_t>(c)]; ++r) {
            const long top = 2 * (H - r - 1);
            for (long row : {top, top + 2}) {
                put(4 * c, row, '+');
                put(4 * c + 4, row, '+');
                for (long k = 1; k <= 3; ++k) {
                    put(4 * c + k, row, '-');
                }
            }
            put(4 * c, top + 1, '|');
            put(4 * c + 4, top + 1, '|');
        }
    }
    if (mark_interior) {
        for (long x = 1; x < W; ++x) {
            for (long y = 1; y < H; ++y) {
                if (is_interior_point(poly, x, y)) {
                    put(4 * x, 2 * (H - y), '*');
                }
            }
        }
    }
    std::string out;
    for (auto &line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

inline std::string render_svg(const catalan_word &w, bool mark_interior, int cell)
{
    const polyomino poly(w);
    const long W = static_cast<long>(poly.width());
    const long H = poly.max_height();
    const long margin = cell / 2;
    const long width = W * cell + 2 * margin;
    const long height = H * cell + 2 * margin;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <g fill=\"#f4c2d7\" stroke=\"#000000\" stroke-width=\"1\">\n";
    for (long c = 0; c < W; ++c) {
        for (long r = 0; r < poly.heights()[static_cast<std::size_t>(c)]; ++r) {
            os << "    <rect x=\"" << margin + c * cell << "\" y=\"" << margin + (H - r - 1) * cell << "\" width=\""
               << cell << "\" height=\"" << cell << "\"/>\n";
        }
    }
    os << "  </g>\n";
    if (mark_interior) {
        os << "  <g fill=\"#000000\">\n";
        for (long x = 1; x < W; ++x) {
            for (long y = 1; y < H; ++y) {
                if (is_interior_point(poly, x, y)) {
                    os << "    <circle cx=\"" << margin + x * cell << "\" cy=\"" << margin + (H - y) * cell
                       << "\" r=\"" << std::max(1, cell / 6) << "\"/>\n";
                }
            }
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline int cmd_render(const std::string &word, const std::string &format, int cell, bool mark_interior,
                      std::ostream &out)
{
    const catalan_word w = parse_word(word);
    if (cell < 1) {
        throw not_in_domain("cell size must be positive");
    }
    out << (format == "ascii-art" ? render_ascii(w, mark_interior) : render_svg(w, mark_interior, cell));
    return ok;
}

// ---------------------------------------------------------------------------
// table

inline int cmd_table(char which, std::size_t max_n, const std::string &format, std::size_t limit, std::ostream &out)
{
    if (max_n < 1) {
        throw not_in_domain("--max-n must be at least 1");
    }
    if (max_n > limit) {
        throw resource_limit("table size " + std::to_string(max_n) + " exceeds limit " + std::to_string(limit));
    }
    const tri_table t = which == 'c'   ? table_c(max_n)
                        : which == 's' ? table_stat(max_n, table_stat_kind::sper, limit)
                        : which == 'u' ? table_stat(max_n, table_stat_kind::area, limit)
                                       : table_stat(max_n, table_stat_kind::inter, limit);
    const long base = t.base();
    if (format == "json") {
        ordered_json j;
        j["table"] = std::string(1, which);
        j["first_index"] = base;
        j["rows"] = ordered_json::array();
        for (std::size_t n = 1; n <= t.rows(); ++n) {
            ordered_json row = ordered_json::array();
            for (const auto &e : t.row(n)) {
                row.push_back(e.get_str());
            }
            j["rows"].push_back(row);
        }
        out << j.dump() << '\n';
        return ok;
    }
    out << "n";
    for (long i = 0; i < static_cast<long>(max_n); ++i) {
        out << ',' << (which == 'c' ? "k" : "i") << '=' << i + base;
    }
    out << "\r\n";
    for (long n = 1; n <= static_cast<long>(max_n); ++n) {
        out << n;
        for (long i = 0; i < static_cast<long>(max_n); ++i) {
            out << ',' << t.at(n, i + base).get_str();
        }
        out << "\r\n";
    }
    return ok;
}

// ---------------------------------------------------------------------------
// gf

/// Series by name, plus the index of its first meaningful coefficient.
inline std::pair<trunc_series, std::size_t> named_series(const std::string &which, std::size_t terms)
{
    const std::map<std::string, trunc_series (*)(std::size_t)> from_one = {
        {"S", cf_S},         {"Clast", cf_C_last},  {"Cpv", cf_C_sper_v}, {"B", sum_B},
        {"H", sum_H},        {"area", prod_area},   {"inter", prod_interior}, {"h", gf_h},
        {"s", gf_s},         {"u", gf_u},           {"p", gf_p},          {"Cpqv", master_pqv},
        {"Cqv", master_interior_qv},
    };
    if (which == "M") {
        return {gf_motzkin(terms), 0};
    }
    if (which == "T") {
        return {gf_trinomial(terms), 0};
    }
    const auto it = from_one.find(which);
    if (it == from_one.end()) {
        throw not_in_domain("unknown series '" + which + "'");
    }
    return {it->second(terms + 1), 1};
}

inline std::vector<var> parse_at(const std::string &spec)
{
    std::vector<var> vars;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 3 || item[1] != '=' || item[2] != '1' || std::string("pqv").find(item[0]) == std::string::npos) {
            throw not_in_domain("--at expects assignments of the form p=1,q=1,v=1, got '" + item + "'");
        }
        vars.push_back(item[0] == 'p' ? var::p : item[0] == 'q' ? var::q : var::v);
    }
    return vars;
}

inline int cmd_gf(const std::string &which, std::size_t terms, const std::string &at, std::size_t limit,
                  std::ostream &out)
{
    if (terms > limit) {
        throw resource_limit("series order " + std::to_string(terms) + " exceeds limit " + std::to_string(limit));
    }
    auto [series, first] = named_series(which, terms);
    for (var x : parse_at(at)) {
        series = series.eval_one(x);
    }
    std::vector<mpoly> shown;
    for (std::size_t n = first; n < first + terms; ++n) {
        shown.push_back(series.coeff(n));
    }
    const bool scalar = std::all_of(shown.begin(), shown.end(), [](const mpoly &c) { return c.is_constant(); });
    for (std::size_t i = 0; i < shown.size(); ++i) {
        out << (i == 0 ? "" : scalar ? " " : "\n") << shown[i].to_string();
    }
    out << '\n';
    return ok;
}

// ---------------------------------------------------------------------------
// bijection / verify

inline int cmd_bijection(const std::string &which, const std::string &word, std::ostream &out)
{
    const catalan_word w = parse_word(word);
    if (which == "chi") {
        const catalan_word img = chi(w);
        out << display_word(img) << '\n';
        out << "length " << w.size() << " -> " << img.size();
        if (!w.empty()) {
            out << ", sper " << stat_sper(w) << " -> " << stat_sper(img);
        }
        out << '\n';
    } else {
        const catalan_word img = psi(w);
        out << display_word(img) << '\n';
        out << "length " << w.size() << " -> " << img.size() << ", area " << stat_area(w) << " -> "
            << stat_area(img);
        if (!w.empty()) {
            out << ", inter " << stat_inter(w) << " -> " << stat_inter(img);
        }
        out << '\n';
    }
    return ok;
}

inline int cmd_verify(const verify_options &o, std::size_t enum_limit, std::size_t series_limit,
                      const std::string &format, std::ostream &out)
{
    if (o.max_n > enum_limit) {
        throw resource_limit("--max-n " + std::to_string(o.max_n) + " exceeds enumeration limit " +
                             std::to_string(enum_limit));
    }
    if (o.max_order > series_limit) {
        throw resource_limit("--max-order " + std::to_string(o.max_order) + " exceeds series limit " +
                             std::to_string(series_limit));
    }
    const verify_report r = run_verify(o);
    std::size_t failed = 0;
    for (const auto &c : r.checks) {
        failed += c.status == check_status::fail;
    }
    if (format == "json") {
        ordered_json j;
        j["checks"] = ordered_json::array();
        for (const auto &c : r.checks) {
            j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        }
        j["exit_code"] = r.exit_code();
        out << j.dump() << '\n';
    } else {
        for (const auto &c : r.checks) {
            out << to_string(c.status) << ' ' << c.name << ": " << c.detail << '\n';
        }
        out << r.checks.size() << " checks, " << failed << " failed\n";
    }
    return r.exit_code();
}

// ---------------------------------------------------------------------------
// argument parsing

/// Runs the command line; args excludes the program name. Returns the exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Catalan words avoiding (>=,>=): enumeration, statistics, series and tables", "catpoly"};
    app.require_subcommand(1);

    const std::map<std::string, word_class> classes = {{"all", word_class::all_catalan},
                                                       {"geqgeq", word_class::avoid_geq_geq},
                                                       {"neq", word_class::avoid_neq_adjacent},
                                                       {"b", word_class::class_b}};

    enumerate_options en;
    auto *enumerate = app.add_subcommand("enumerate", "List the words of a class");
    enumerate->add_option("--length", en.length, "Word length")->required();
    std::string class_name = "geqgeq";
    enumerate->add_option("--class", class_name, "all | geqgeq | neq | b")
        ->check(CLI::IsMember({"all", "geqgeq", "neq", "b"}));
    enumerate->add_option("--format", en.format)->check(CLI::IsMember({"text", "json", "csv"}));
    enumerate->add_option("--limit", en.limit, "Largest length accepted (memory grows like 3^n)");

    std::string word, format, which, at;
    auto *stats_cmd = app.add_subcommand("stats", "Statistics of one word");
    stats_cmd->add_option("--word", word)->required();
    stats_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int cell = 20;
    bool mark = false;
    auto *render = app.add_subcommand("render", "Draw the polyomino of a word");
    render->add_option("--word", word)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii-art"}));
    render->add_option("--cell-size", cell, "Pixels per unit cell (svg)");
    render->add_flag("--mark-interior", mark, "Mark interior points");

    std::size_t max_n = 10, table_limit = default_table_limit;
    auto *table = app.add_subcommand("table", "Triangular tables c, s, u, p");
    table->add_option("--which", which)->required()->check(CLI::IsMember({"c", "s", "u", "p"}));
    table->add_option("--max-n", max_n);
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--limit", table_limit, "Largest row count accepted");

    std::size_t order = 10, series_limit = default_series_limit;
    auto *gf = app.add_subcommand("gf", "Coefficients of a generating function");
    gf->add_option("--which", which, "M T S Clast Cpv Cpqv Cqv B H area inter h s u p")->required();
    gf->add_option("--order", order, "Number of coefficients");
    gf->add_option("--at", at, "Markers set to 1, e.g. p=1,v=1");
    gf->add_option("--limit", series_limit, "Largest order accepted (cost grows steeply)");

    auto *bij = app.add_subcommand("bijection", "Apply chi or psi to a word");
    bij->add_option("--which", which)->required()->check(CLI::IsMember({"chi", "psi"}));
    bij->add_option("--word", word)->required();

    verify_options vo;
    bool sequential = false;
    std::size_t enum_limit = default_enumeration_limit;
    auto *ver = app.add_subcommand("verify", "Run the cross-check suite");
    ver->add_option("--max-n", vo.max_n, "Exhaustive enumeration bound");
    ver->add_option("--max-order", vo.max_order, "Series order");
    ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    ver->add_flag("--sequential", sequential, "Run checks one at a time");
    ver->add_option("--enumeration-limit", enum_limit);
    ver->add_option("--series-limit", series_limit);

    std::vector<std::string> storage{"catpoly"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*enumerate) {
            en.cls = classes.at(class_name);
            return cmd_enumerate(en, out);
        }
        if (*stats_cmd) {
            return cmd_stats(word, format.empty() ? "text" : format, out);
        }
        if (*render) {
            return cmd_render(word, format.empty() ? "svg" : format, cell, mark, out);
        }
        if (*table) {
            return cmd_table(which[0], max_n, format.empty() ? "csv" : format, table_limit, out);
        }
        if (*gf) {
            return cmd_gf(which, order, at, series_limit, out);
        }
        if (*bij) {
            return cmd_bijection(which, word, out);
        }
        vo.concurrent = !sequential;
        return cmd_verify(vo, enum_limit, series_limit, format.empty() ? "text" : format, out);
    } catch (const resource_limit &e) {
        err << "catpoly: " << e.what() << '\n';
        return limit_exceeded;
    } catch (const not_catalan &e) {
        err << "catpoly: " << e.what() << '\n';
        return usage;
    } catch (const not_in_domain &e) {
        err << "catpoly: " << e.what() << '\n';
        return usage;
    } catch (const empty_word &e) {
        err << "catpoly: " << e.what() << '\n';
        return usage;
    } catch (const error &e) {
        err << "catpoly: " << e.what() << '\n';
        return verification_failed;
    }
}

} // namespace catpoly::cli
