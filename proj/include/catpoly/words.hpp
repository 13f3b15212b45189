#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace catpoly {

using letter = int;

/// A sequence w with w[0] = 0 and 0 <= w[i] <= w[i-1] + 1. The empty word is valid.
class catalan_word {
public:
    catalan_word() = default;

    /// Throws not_catalan carrying the first offending 0-based index.
    static catalan_word validate(std::span<const letter> seq)
    {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const letter upper = i == 0 ? 0 : seq[i - 1] + 1;
            if (seq[i] < 0 || seq[i] > upper) {
                throw not_catalan(i);
            }
        }
        catalan_word w;
        w.letters_.assign(seq.begin(), seq.end());
        return w;
    }

    static catalan_word validate(std::initializer_list<letter> seq)
    {
        return validate(std::span<const letter>(seq.begin(), seq.size()));
    }

    const std::vector<letter> &letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    letter operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const catalan_word &, const catalan_word &) = default;
    friend auto operator<=>(const catalan_word &a, const catalan_word &b)
    {
        return a.letters_ <=> b.letters_;
    }

private:
    // Unchecked construction for generators that maintain the invariant themselves.
    struct trusted_t {};
    catalan_word(trusted_t, std::vector<letter> letters) : letters_(std::move(letters)) {}

    friend catalan_word make_trusted_word(std::vector<letter> letters);

    std::vector<letter> letters_;
};

inline catalan_word make_trusted_word(std::vector<letter> letters)
{
    return catalan_word(catalan_word::trusted_t{}, std::move(letters));
}

/// Column-height view: heights[i] = w[i] + 1.
class polyomino {
public:
    explicit polyomino(const catalan_word &w)
    {
        heights_.reserve(w.size());
        for (letter a : w.letters()) {
            heights_.push_back(a + 1);
        }
    }

    const std::vector<int> &heights() const noexcept { return heights_; }
    std::size_t width() const noexcept { return heights_.size(); }
    int max_height() const
    {
        return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
    }

    // Unit cell with lower-left corner (col, row).
    bool has_cell(long col, long row) const
    {
        return col >= 0 && row >= 0 && static_cast<std::size_t>(col) < heights_.size() &&
               row < heights_[static_cast<std::size_t>(col)];
    }

private:
    std::vector<int> heights_;
};

enum class word_class { all_catalan, avoid_geq_geq, avoid_neq_adjacent, class_b };

inline std::string_view to_string(word_class c)
{
    switch (c) {
    case word_class::all_catalan: return "all";
    case word_class::avoid_geq_geq: return "geqgeq";
    case word_class::avoid_neq_adjacent: return "neq";
    case word_class::class_b: return "b";
    }
    return "?";
}

namespace detail {

inline bool geq_geq_at(std::span<const letter> w, std::size_t i)
{
    return w[i] >= w[i + 1] && w[i + 1] >= w[i + 2];
}

} // namespace detail

inline bool avoids(const catalan_word &w, word_class c)
{
    const auto &s = w.letters();
    const std::size_t n = s.size();
    switch (c) {
    case word_class::all_catalan:
        return true;
    case word_class::avoid_geq_geq:
        for (std::size_t i = 0; i + 2 < n; ++i) {
            if (detail::geq_geq_at(s, i)) {
                return false;
            }
        }
        return true;
    case word_class::avoid_neq_adjacent:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (s[i] == s[i + 1]) {
                return false;
            }
        }
        return true;
    case word_class::class_b:
        return avoids(w, word_class::avoid_geq_geq) && (n < 2 || s[n - 2] < s[n - 1]);
    }
    return false;
}

inline constexpr std::size_t default_enumeration_limit = 16;

/// Calls visit on every word of length n in class c, in lexicographic order.
inline void for_each_word(std::size_t n, word_class c,
                          const std::function<void(const catalan_word &)> &visit,
                          std::size_t limit = default_enumeration_limit)
{
    if (n > limit) {
        throw resource_limit("enumeration length " + std::to_string(n) + " exceeds limit " +
                             std::to_string(limit));
    }
    if (n == 0) {
        visit(catalan_word{});
        return;
    }
    std::vector<letter> buf;
    buf.reserve(n);

    // Prefix pruning: the pattern conditions are local, so a prefix that
    // already contains a forbidden factor can never be completed.
    const auto prefix_ok = [&] {
        const std::size_t k = buf.size();
        switch (c) {
        case word_class::avoid_geq_geq:
        case word_class::class_b:
            return k < 3 || !detail::geq_geq_at(buf, k - 3);
        case word_class::avoid_neq_adjacent:
            return k < 2 || buf[k - 2] != buf[k - 1];
        case word_class::all_catalan:
            return true;
        }
        return true;
    };

    std::function<void()> extend = [&] {
        if (buf.size() == n) {
            if (c != word_class::class_b || n < 2 || buf[n - 2] < buf[n - 1]) {
                visit(make_trusted_word(buf));
            }
            return;
        }
        const letter top = buf.empty() ? 0 : buf.back() + 1;
        for (letter a = 0; a <= top; ++a) {
            buf.push_back(a);
            if (prefix_ok()) {
                extend();
            }
            buf.pop_back();
        }
    };
    extend();
}

inline std::vector<catalan_word> enumerate(std::size_t n, word_class c,
                                           std::size_t limit = default_enumeration_limit)
{
    std::vector<catalan_word> out;
    for_each_word(n, c, [&](const catalan_word &w) { out.push_back(w); }, limit);
    return out;
}

/// Exact cardinality by dynamic programming over (last letter, last step was weakly
/// decreasing). Never materializes words.
inline big_int count(std::size_t n, word_class c)
{
    if (n == 0) {
        return 1;
    }
    // state[b][f]: words ending in letter b; f = previous letter >= b.
    std::vector<std::array<big_int, 2>> state(n + 1);
    state[0][0] = 1;
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<std::array<big_int, 2>> next(n + 1);
        for (std::size_t b = 0; b < len; ++b) {
            for (int f = 0; f < 2; ++f) {
                const big_int &cur = state[b][f];
                if (cur == 0) {
                    continue;
                }
                for (std::size_t a = 0; a <= b + 1; ++a) {
                    const bool down = b >= a;
                    switch (c) {
                    case word_class::avoid_geq_geq:
                    case word_class::class_b:
                        if (f && down) {
                            continue;
                        }
                        break;
                    case word_class::avoid_neq_adjacent:
                        if (a == b) {
                            continue;
                        }
                        break;
                    case word_class::all_catalan:
                        break;
                    }
                    next[a][down ? 1 : 0] += cur;
                }
            }
        }
        state = std::move(next);
    }
    big_int total = 0;
    for (const auto &s : state) {
        total += s[0];
        if (c != word_class::class_b || n < 2) {
            total += s[1];
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Statistics

struct stat_record {
    std::size_t length = 0;
    long area = 0;
    long sper = 0;
    long inter = 0;
    letter last = 0;

    friend bool operator==(const stat_record &, const stat_record &) = default;
};

inline long stat_area(const catalan_word &w)
{
    long area = 0;
    for (letter a : w.letters()) {
        area += a + 1;
    }
    return area;
}

inline letter stat_last(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    return w.letters().back();
}

/// n + (h_1 + h_n + sum |h_{i+1} - h_i|) / 2.
inline long stat_sper(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    const auto &s = w.letters();
    long twice = (s.front() + 1) + (s.back() + 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        twice += std::abs(s[i + 1] - s[i]);
    }
    return static_cast<long>(s.size()) + twice / 2;
}

/// sum over adjacent columns of min(h_i, h_{i+1}) - 1.
inline long stat_inter(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    const auto &s = w.letters();
    long total = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        total += std::min(s[i], s[i + 1]);
    }
    return total;
}

/// Counts boundary unit edges on the explicit cell grid.
inline long sper_oracle(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    const polyomino poly(w);
    long edges = 0;
    for (long col = 0; col < static_cast<long>(poly.width()); ++col) {
        for (long row = 0; row < poly.heights()[static_cast<std::size_t>(col)]; ++row) {
            edges += !poly.has_cell(col - 1, row);
            edges += !poly.has_cell(col + 1, row);
            edges += !poly.has_cell(col, row - 1);
            edges += !poly.has_cell(col, row + 1);
        }
    }
    return edges / 2;
}

/// Lattice points (x, y) whose four surrounding unit cells are all present.
inline bool is_interior_point(const polyomino &poly, long x, long y)
{
    return poly.has_cell(x - 1, y - 1) && poly.has_cell(x, y - 1) && poly.has_cell(x - 1, y) &&
           poly.has_cell(x, y);
}

inline long inter_oracle(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    const polyomino poly(w);
    long points = 0;
    for (long x = 1; x < static_cast<long>(poly.width()); ++x) {
        for (long y = 1; y < poly.max_height(); ++y) {
            points += is_interior_point(poly, x, y);
        }
    }
    return points;
}

inline stat_record stats(const catalan_word &w)
{
    return {w.size(), stat_area(w), stat_sper(w), stat_inter(w), stat_last(w)};
}

// ---------------------------------------------------------------------------
// Dyck paths

/// The Dyck path whose up steps start at ordinates w[0], w[1], ... as a string over {U, D}.
inline std::string to_dyck(const catalan_word &w)
{
    if (w.empty()) {
        throw empty_word();
    }
    std::string path;
    path.reserve(2 * w.size());
    letter height = 0;
    for (letter a : w.letters()) {
        path.append(static_cast<std::size_t>(height - a), 'D');
        path.push_back('U');
        height = a + 1;
    }
    path.append(static_cast<std::size_t>(height), 'D');
    return path;
}

/// Reads the up-step ordinates of a Dyck path. Throws not_in_domain on a malformed path.
inline catalan_word from_dyck(std::string_view path)
{
    std::vector<letter> letters;
    letter height = 0;
    for (char step : path) {
        if (step == 'U') {
            letters.push_back(height++);
        } else if (step == 'D') {
            if (--height < 0) {
                throw not_in_domain("path dips below the axis");
            }
        } else {
            throw not_in_domain(std::string("bad step '") + step + "'");
        }
    }
    if (height != 0) {
        throw not_in_domain("path does not return to the axis");
    }
    return catalan_word::validate(letters);
}

// ---------------------------------------------------------------------------
// Text form

/// Digit string when every letter is <= 9, comma-separated integers otherwise.
/// The empty word is written as an empty string.
inline std::string format_word(const catalan_word &w)
{
    const auto &s = w.letters();
    const bool digits = std::all_of(s.begin(), s.end(), [](letter a) { return a <= 9; });
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!digits && i > 0) {
            out.push_back(',');
        }
        out += std::to_string(s[i]);
    }
    return out;
}

/// Accepts both forms written by format_word; "ε" and "" denote the empty word.
inline catalan_word parse_word(std::string_view text)
{
    std::vector<letter> letters;
    if (text.empty() || text == "ε" || text == "eps") {
        return {};
    }
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw not_in_domain("word contains a non-digit: '" + std::string(text) + "'");
            }
            letters.push_back(ch - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = std::min(text.find(',', start), text.size());
            const std::string_view tok = text.substr(start, end - start);
            if (tok.empty() || tok.size() > 9 ||
                !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                throw not_in_domain("bad letter '" + std::string(tok) + "'");
            }
            letters.push_back(std::stoi(std::string(tok)));
            start = end + 1;
        }
    }
    return catalan_word::validate(letters);
}

} // namespace catpoly
