#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mpoly.hpp"
#include "series.hpp"
#include "tables.hpp"
#include "words.hpp"

// Exhaustive-enumeration ground truth. Nothing here touches the series
// arithmetic beyond using mpoly as a container of counts.

namespace catpoly::oracle {

/// Coefficient n (1 <= n < order) is the sum over words of length n in the
/// class of marker(w).
inline trunc_series histogram(std::size_t order, word_class cls,
                              const std::function<monomial(const catalan_word &)> &marker,
                              std::size_t limit = default_enumeration_limit)
{
    std::vector<mpoly> coeffs(order);
    for (std::size_t n = 1; n < order; ++n) {
        std::map<monomial, rational> acc;
        for_each_word(n, cls, [&](const catalan_word &w) { acc[marker(w)] += 1; }, limit);
        coeffs[n] = mpoly::from_map(acc);
    }
    return trunc_series(std::move(coeffs), degree_caps{});
}

inline monomial u32(long sper, long area, long last)
{
    return {static_cast<std::uint32_t>(sper), static_cast<std::uint32_t>(area), static_cast<std::uint32_t>(last)};
}

/// (semiperimeter, area, last letter) histogram of (>=,>=)-avoiding words.
inline trunc_series master_pqv(std::size_t order)
{
    return histogram(order, word_class::avoid_geq_geq,
                     [](const catalan_word &w) { return u32(stat_sper(w), stat_area(w), stat_last(w)); });
}

/// (interior points, last letter) histogram, interior points on q.
inline trunc_series master_interior_qv(std::size_t order)
{
    return histogram(order, word_class::avoid_geq_geq,
                     [](const catalan_word &w) { return u32(0, stat_inter(w), stat_last(w)); });
}

inline trunc_series area(std::size_t order, word_class cls = word_class::avoid_geq_geq)
{
    return histogram(order, cls, [](const catalan_word &w) { return u32(0, stat_area(w), 0); });
}

inline trunc_series interior(std::size_t order, word_class cls = word_class::avoid_geq_geq)
{
    return histogram(order, cls, [](const catalan_word &w) { return u32(0, stat_inter(w), 0); });
}

enum class statistic { area, sper, inter, last };

inline long evaluate(statistic s, const catalan_word &w)
{
    switch (s) {
    case statistic::area: return stat_area(w);
    case statistic::sper: return stat_sper(w);
    case statistic::inter: return stat_inter(w);
    case statistic::last: return stat_last(w);
    }
    return 0;
}

/// Sum of a statistic over all (>=,>=)-avoiding words of length n >= 1.
inline big_int total(std::size_t n, statistic s, std::size_t limit = default_enumeration_limit)
{
    big_int sum = 0;
    for_each_word(n, word_class::avoid_geq_geq, [&](const catalan_word &w) { sum += evaluate(s, w); }, limit);
    return sum;
}

/// Table of the statistic by last column height (or last letter for counts, s = nullopt).
inline tri_table table(std::size_t max_n, std::optional<statistic> s, std::size_t limit = default_enumeration_limit)
{
    const char name = !s ? 'c' : *s == statistic::sper ? 's' : *s == statistic::area ? 'u' : 'p';
    tri_table t(name, s ? 1 : 0);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<big_int> row(n);
        for_each_word(n, word_class::avoid_geq_geq, [&](const catalan_word &w) {
            row[static_cast<std::size_t>(stat_last(w))] += s ? evaluate(*s, w) : 1;
        }, limit);
        t.push_row(std::move(row));
    }
    return t;
}

} // namespace catpoly::oracle
