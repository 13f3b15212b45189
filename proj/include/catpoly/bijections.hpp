#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "words.hpp"

namespace catpoly {

/// w = 0 . elevated_block . remainder, where elevated_block is the maximal run
/// of letters >= 1 after the initial 0 and remainder is empty or starts with 0.
struct first_return {
    std::vector<letter> elevated_block;
    catalan_word remainder;

    /// The block with every letter decreased by one; a Catalan word.
    catalan_word lowered() const
    {
        std::vector<letter> u(elevated_block);
        for (auto &a : u) {
            --a;
        }
        return make_trusted_word(std::move(u));
    }
};

inline first_return decompose(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    const auto &s = w.letters();
    std::size_t j = 1;
    while (j < s.size() && s[j] != 0) {
        ++j;
    }
    return {std::vector<letter>(s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(j)),
            make_trusted_word(std::vector<letter>(s.begin() + static_cast<std::ptrdiff_t>(j), s.end()))};
}

/// Counts how often the recursion used a case beyond its literal printed form.
struct chi_trace {
    std::size_t empty_block_nonelevated_tail = 0; ///< w = 00z with z containing a 0
    std::size_t block_ending_in_zero = 0;         ///< block and remainder nonempty, last lowered letter 0

    chi_trace &operator+=(const chi_trace &o)
    {
        empty_block_nonelevated_tail += o.empty_block_nonelevated_tail;
        block_ending_in_zero += o.block_ending_in_zero;
        return *this;
    }
};

namespace detail {

inline void append_lifted(std::vector<letter> &out, const std::vector<letter> &w)
{
    for (letter a : w) {
        out.push_back(a + 1);
    }
}

inline std::vector<letter> chi_rec(const catalan_word &w, chi_trace &trace)
{
    if (w.empty()) {
        return {0};
    }
    const first_return d = decompose(w);
    const catalan_word u = d.lowered();
    const catalan_word &rest = d.remainder;
    std::vector<letter> out;
    if (rest.empty()) {
        out.push_back(0);
        append_lifted(out, chi_rec(u, trace));
    } else if (u.empty()) {
        const auto &z = rest.letters();
        if (std::find(z.begin() + 1, z.end(), 0) != z.end()) {
            ++trace.empty_block_nonelevated_tail;
        }
        out = chi_rec(rest, trace);
        out.push_back(0);
    } else {
        if (u.letters().back() == 0) {
            ++trace.block_ending_in_zero;
        }
        std::vector<letter> head(u.letters().begin(), u.letters().end() - 1);
        out.push_back(0);
        append_lifted(out, chi_rec(make_trusted_word(std::move(head)), trace));
        const auto tail = chi_rec(rest, trace);
        out.insert(out.end(), tail.begin(), tail.end());
    }
    return out;
}

inline std::vector<letter> psi_rec(const catalan_word &w)
{
    if (w.empty()) {
        return {};
    }
    const first_return d = decompose(w);
    std::vector<letter> out;
    if (!d.elevated_block.empty()) {
        out.push_back(0);
        append_lifted(out, psi_rec(d.lowered()));
        const auto tail = psi_rec(d.remainder);
        out.insert(out.end(), tail.begin(), tail.end());
    } else {
        out = psi_rec(d.remainder);
        out.push_back(0);
    }
    return out;
}

} // namespace detail

/// (>=,>=)-avoiding words of length n onto words of length n + 1 without equal
/// adjacent letters; adds 2 to the semiperimeter.
inline catalan_word chi(const catalan_word &w, chi_trace *trace = nullptr)
{
    if (!avoids(w, word_class::avoid_geq_geq)) {
        throw not_in_domain("chi requires a (>=,>=)-avoiding word");
    }
    chi_trace local;
    auto out = detail::chi_rec(w, local);
    if (trace) {
        *trace += local;
    }
    return make_trusted_word(std::move(out));
}

/// Words of class B onto words without equal adjacent letters; preserves
/// length, area and interior points.
inline catalan_word psi(const catalan_word &w)
{
    if (!avoids(w, word_class::class_b)) {
        throw not_in_domain("psi requires a (>=,>=)-avoiding word ending with a strict ascent");
    }
    return make_trusted_word(detail::psi_rec(w));
}

struct bijection_report {
    std::size_t n = 0;
    // chi on C_{>=,>=}(n)
    std::size_t chi_domain = 0;
    std::size_t chi_distinct = 0;
    std::size_t chi_target = 0; ///< |C_{!=}(n+1)|
    chi_trace chi_cases;
    // psi on B(n)
    std::size_t psi_domain = 0;
    std::size_t psi_distinct = 0;
    std::size_t psi_target = 0; ///< |C_{!=}(n)|
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

inline bijection_report verify_bijectivity(std::size_t n, std::size_t limit = default_enumeration_limit)
{
    bijection_report r;
    r.n = n;
    const auto record = [&](const std::string &what, const catalan_word &w) {
        if (r.violations.size() < 20) {
            r.violations.push_back(what + " at " + format_word(w));
        }
    };

    std::set<catalan_word> chi_images;
    for_each_word(n, word_class::avoid_geq_geq, [&](const catalan_word &w) {
        ++r.chi_domain;
        const catalan_word img = chi(w, &r.chi_cases);
        if (img.size() != n + 1) {
            record("chi length", w);
        }
        if (!avoids(img, word_class::avoid_neq_adjacent)) {
            record("chi image has equal adjacent letters", w);
        }
        if (!w.empty() && stat_sper(img) != stat_sper(w) + 2) {
            record("chi semiperimeter shift", w);
        }
        chi_images.insert(img);
    }, limit);
    r.chi_distinct = chi_images.size();
    r.chi_target = enumerate(n + 1, word_class::avoid_neq_adjacent, limit + 1).size();
    if (r.chi_distinct != r.chi_domain) {
        r.violations.push_back("chi not injective");
    }
    if (r.chi_distinct != r.chi_target) {
        r.violations.push_back("chi not onto C_neq(n+1)");
    }

    std::set<catalan_word> psi_images;
    for_each_word(n, word_class::class_b, [&](const catalan_word &w) {
        ++r.psi_domain;
        const catalan_word img = psi(w);
        if (img.size() != n) {
            record("psi length", w);
        }
        if (!avoids(img, word_class::avoid_neq_adjacent)) {
            record("psi image has equal adjacent letters", w);
        }
        if (stat_area(img) != stat_area(w)) {
            record("psi area", w);
        }
        if (!w.empty() && stat_inter(img) != stat_inter(w)) {
            record("psi interior points", w);
        }
        psi_images.insert(img);
    }, limit);
    r.psi_distinct = psi_images.size();
    r.psi_target = enumerate(n, word_class::avoid_neq_adjacent, limit).size();
    if (r.psi_distinct != r.psi_domain) {
        r.violations.push_back("psi not injective");
    }
    return r;
}

} // namespace catpoly
