#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace catpoly {

/// Lower-triangular table of big integers. Row n (n >= 1) holds n entries;
/// the column index is the last letter k (base 0, table c) or the height
/// i = k + 1 of the last column (base 1, tables s, u, p).
class tri_table {
public:
    tri_table(char name, int base) : name_(name), base_(base) {}

    char name() const noexcept { return name_; }
    int base() const noexcept { return base_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    const std::vector<big_int> &row(std::size_t n) const { return rows_.at(n - 1); }

    /// Entry (n, idx); zero anywhere outside the stored triangle.
    big_int at(long n, long idx) const
    {
        if (n < 1 || n > static_cast<long>(rows_.size())) {
            return 0;
        }
        const long j = idx - base_;
        const auto &r = rows_[static_cast<std::size_t>(n - 1)];
        if (j < 0 || j >= static_cast<long>(r.size())) {
            return 0;
        }
        return r[static_cast<std::size_t>(j)];
    }

    big_int row_sum(std::size_t n) const
    {
        big_int s = 0;
        for (const auto &e : row(n)) {
            s += e;
        }
        return s;
    }

    void push_row(std::vector<big_int> r) { rows_.push_back(std::move(r)); }

    friend bool operator==(const tri_table &, const tri_table &) = default;

private:
    char name_;
    int base_;
    std::vector<std::vector<big_int>> rows_;
};

inline constexpr std::size_t default_table_limit = 60;

/// c(n, k) from c(n+1, 0) = sum_{j<=n-2} c(n-1, j) and
/// c(n+1, k+1) = c(n, k) + sum_{j=k}^{n-2} c(n-1, j), with c(1,0) = c(2,0) = c(2,1) = 1.
inline tri_table table_c(std::size_t max_n)
{
    tri_table t('c', 0);
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n == 1) {
            t.push_row({1});
            continue;
        }
        if (n == 2) {
            t.push_row({1, 1});
            continue;
        }
        const long m = static_cast<long>(n) - 1; // row n = m + 1
        std::vector<big_int> r(n);
        for (long j = 0; j <= m - 2; ++j) {
            r[0] += t.at(m - 1, j);
        }
        for (long k = 0; k + 1 < static_cast<long>(n); ++k) {
            big_int v = t.at(m, k);
            for (long j = k; j <= m - 2; ++j) {
                v += t.at(m - 1, j);
            }
            r[static_cast<std::size_t>(k + 1)] = v;
        }
        t.push_row(std::move(r));
    }
    return t;
}

enum class table_stat_kind { sper, area, inter };

inline char table_name(table_stat_kind k)
{
    switch (k) {
    case table_stat_kind::sper: return 's';
    case table_stat_kind::area: return 'u';
    case table_stat_kind::inter: return 'p';
    }
    return '?';
}

/// Entry (n, i): sum of the statistic over words of length n whose last
/// column has height i. Statistics-carrying DP over (last letter, weakly
/// decreasing flag); each state holds (count, statistic sum).
inline tri_table table_stat(std::size_t max_n, table_stat_kind kind, std::size_t limit = default_table_limit)
{
    if (max_n > limit) {
        throw resource_limit("table size " + std::to_string(max_n) + " exceeds limit " + std::to_string(limit));
    }
    struct cell {
        big_int count;
        big_int sum;
    };
    tri_table t(table_name(kind), 1);
    if (max_n == 0) {
        return t;
    }
    const long initial = kind == table_stat_kind::sper ? 2 : kind == table_stat_kind::area ? 1 : 0;
    std::vector<std::array<cell, 2>> state(1);
    state[0][0] = {1, initial};
    const auto emit_row = [&] {
        std::vector<big_int> r(state.size());
        for (std::size_t b = 0; b < state.size(); ++b) {
            r[b] = state[b][0].sum + state[b][1].sum;
        }
        t.push_row(std::move(r));
    };
    emit_row();
    for (std::size_t len = 1; len < max_n; ++len) {
        std::vector<std::array<cell, 2>> next(len + 1);
        for (std::size_t b = 0; b < state.size(); ++b) {
            for (int f = 0; f < 2; ++f) {
                const cell &cur = state[b][f];
                if (cur.count == 0) {
                    continue;
                }
                for (std::size_t a = 0; a <= b + 1; ++a) {
                    const bool down = b >= a;
                    if (f && down) {
                        continue;
                    }
                    long delta = 0;
                    switch (kind) {
                    case table_stat_kind::sper: delta = 1 + (a > b ? 1 : 0); break;
                    case table_stat_kind::area: delta = static_cast<long>(a) + 1; break;
                    case table_stat_kind::inter: delta = static_cast<long>(std::min(a, b)); break;
                    }
                    cell &dst = next[a][down ? 1 : 0];
                    dst.count += cur.count;
                    dst.sum += cur.sum + delta * cur.count;
                }
            }
        }
        state = std::move(next);
        emit_row();
    }
    return t;
}

struct table_set {
    tri_table c;
    tri_table s;
    tri_table u;
    tri_table p;
};

inline table_set build_tables(std::size_t max_n, std::size_t limit = default_table_limit)
{
    if (max_n > limit) {
        throw resource_limit("table size " + std::to_string(max_n) + " exceeds limit " + std::to_string(limit));
    }
    return {table_c(max_n), table_stat(max_n, table_stat_kind::sper, limit),
            table_stat(max_n, table_stat_kind::area, limit), table_stat(max_n, table_stat_kind::inter, limit)};
}

// ---------------------------------------------------------------------------
// Printed recurrences, evaluated as claims against the tables

enum class recurrence { s_base, u_base, p_base, s_diff, u_diff, p_diff };

inline std::string_view to_string(recurrence r)
{
    switch (r) {
    case recurrence::s_base: return "s_base";
    case recurrence::u_base: return "u_base";
    case recurrence::p_base: return "p_base";
    case recurrence::s_diff: return "s_diff";
    case recurrence::u_diff: return "u_diff";
    case recurrence::p_diff: return "p_diff";
    }
    return "?";
}

struct recurrence_mismatch {
    long n;
    long i;
    big_int table_value;
    big_int formula_value;

    friend bool operator==(const recurrence_mismatch &, const recurrence_mismatch &) = default;
};

struct recurrence_report {
    recurrence which;
    std::size_t checked = 0;
    std::vector<long> skipped_rows; ///< rows below the formula's stated range
    std::vector<recurrence_mismatch> mismatches;

    friend bool operator==(const recurrence_report &, const recurrence_report &) = default;
};

inline recurrence_report check_recurrences(const table_set &t, recurrence which)
{
    const auto C = [&](long n, long k) { return t.c.at(n, k); };
    const auto S = [&](long n, long i) { return t.s.at(n, i); };
    const auto U = [&](long n, long i) { return t.u.at(n, i); };
    const auto P = [&](long n, long i) { return t.p.at(n, i); };

    const tri_table &target = (which == recurrence::s_base || which == recurrence::s_diff)   ? t.s
                              : (which == recurrence::u_base || which == recurrence::u_diff) ? t.u
                                                                                             : t.p;
    long min_n = 2;
    long min_i = 2;
    long max_i_offset = 0; // i <= n - offset
    switch (which) {
    case recurrence::s_base:
    case recurrence::s_diff: min_n = 3; max_i_offset = 1; break;
    case recurrence::u_base:
    case recurrence::p_base: break;
    case recurrence::u_diff:
    case recurrence::p_diff: min_i = 3; break;
    }

    const auto formula = [&](long n, long i) -> big_int {
        big_int r = 0;
        switch (which) {
        case recurrence::s_base:
            r = S(n - 1, i - 1) + 2 * C(n - 1, i - 2);
            for (long k = i - 1; k <= n - 2; ++k) {
                if (k != i) {
                    r += S(n - 2, k) + 3 * C(n - 2, k - 1);
                }
            }
            return r;
        case recurrence::s_diff:
            return S(n, i - 1) + S(n - 1, i - 1) + S(n - 2, i - 1) - S(n - 1, i - 2) - S(n - 2, i) -
                   S(n - 2, i - 2) + 2 * (C(n - 1, i - 2) - C(n - 1, i - 3)) +
                   3 * (C(n - 2, i - 2) - C(n - 2, i - 1) - C(n - 2, i - 2));
        case recurrence::u_base:
            r = U(n - 1, i - 1) + (i + 1) * C(n - 1, i - 2);
            for (long k = i; k <= n - 2; ++k) {
                r += U(n - 2, k - 1) + (i + k + 2) * C(n - 2, k - 2);
            }
            return r;
        case recurrence::u_diff:
            r = U(n, i - 1) + U(n - 1, i - 1) - U(n - 1, i - 2) + U(n - 2, n - 3) - U(n - 2, i - 2) +
                (n + i) * C(n - 2, n - 4) - (2 * i + 1) * C(n - 2, i - 3) + (i + 1) * C(n - 1, i - 2) -
                i * C(n - 1, i - 3);
            for (long k = i - 1; k <= n - 2; ++k) {
                r += C(n - 2, k - 2);
            }
            return r;
        case recurrence::p_base:
            r = P(n - 1, i - 1) + (i - 2) * C(n - 1, i - 2);
            for (long k = i; k <= n - 2; ++k) {
                r += P(n - 2, k - 1) + (i + k - 3) * C(n - 2, k - 2);
            }
            return r;
        case recurrence::p_diff:
            r = P(n, i - 1) + P(n - 1, i - 1) - P(n - 1, i - 2) + (i - 2) * C(n - 1, i - 2) -
                (i - 3) * C(n - 1, i - 3) + P(n - 2, n - 3) - P(n - 2, i - 2) + (n + i - 5) * C(n - 2, n - 4) -
                (2 * i - 4) * C(n - 2, i - 3);
            for (long k = i - 2; k <= n - 2; ++k) {
                r += C(n - 2, k - 2);
            }
            return r;
        }
        return r;
    };

    recurrence_report report{which, 0, {}, {}};
    for (long n = 1; n <= static_cast<long>(target.rows()); ++n) {
        if (n < min_n) {
            report.skipped_rows.push_back(n);
            continue;
        }
        for (long i = min_i; i <= n - max_i_offset; ++i) {
            ++report.checked;
            big_int lhs = target.at(n, i);
            big_int rhs = formula(n, i);
            if (lhs != rhs) {
                report.mismatches.push_back({n, i, std::move(lhs), std::move(rhs)});
            }
        }
    }
    return report;
}

struct totals_t {
    std::vector<big_int> h, s, u, p; ///< index n - 1
};

/// h(n) = sum_k k c(n, k); s, u, p are row sums.
inline totals_t totals(const table_set &t)
{
    totals_t out;
    for (std::size_t n = 1; n <= t.c.rows(); ++n) {
        big_int h = 0;
        const auto &r = t.c.row(n);
        for (std::size_t k = 0; k < r.size(); ++k) {
            h += static_cast<unsigned long>(k) * r[k];
        }
        out.h.push_back(h);
        out.s.push_back(t.s.row_sum(n));
        out.u.push_back(t.u.row_sum(n));
        out.p.push_back(t.p.row_sum(n));
    }
    return out;
}

} // namespace catpoly
