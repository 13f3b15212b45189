#pragma once

// Small independent oracles used only by the tests.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace test_oracle {

/// Motzkin numbers from m_n = m_{n-1} + sum_k m_k m_{n-2-k}.
inline std::vector<mpz_class> motzkin_numbers(std::size_t up_to)
{
    std::vector<mpz_class> m(up_to + 1);
    m[0] = 1;
    for (std::size_t n = 1; n <= up_to; ++n) {
        m[n] = m[n - 1];
        for (std::size_t k = 0; k + 2 <= n; ++k) {
            m[n] += m[k] * m[n - 2 - k];
        }
    }
    return m;
}

/// Every sequence with s[0] = 0 and s[i] <= s[i-1] + 1, by plain recursion.
inline void catalan_sequences(std::size_t n, std::vector<int> &prefix, std::vector<std::vector<int>> &out)
{
    if (prefix.size() == n) {
        out.push_back(prefix);
        return;
    }
    const int hi = prefix.empty() ? 0 : prefix.back() + 1;
    for (int a = 0; a <= hi; ++a) {
        prefix.push_back(a);
        catalan_sequences(n, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> catalan_sequences(std::size_t n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    catalan_sequences(n, prefix, out);
    return out;
}

inline bool has_weak_double_descent(const std::vector<int> &s)
{
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i] >= s[i + 1] && s[i + 1] >= s[i + 2]) {
            return true;
        }
    }
    return false;
}

inline std::vector<std::vector<int>> geqgeq_sequences(std::size_t n)
{
    std::vector<std::vector<int>> out;
    for (auto &s : catalan_sequences(n)) {
        if (!has_weak_double_descent(s)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Area, semiperimeter and interior points read off a cell bitmap.
struct geometry {
    long area = 0;
    long sper = 0;
    long inter = 0;
};

inline geometry measure(const std::vector<int> &s)
{
    const long w = static_cast<long>(s.size());
    long h = 0;
    for (int a : s) {
        h = std::max<long>(h, a + 1);
    }
    const auto cell = [&](long x, long y) {
        return x >= 0 && x < w && y >= 0 && y < s[static_cast<std::size_t>(x)] + 1;
    };
    geometry g;
    long boundary_edges = 0;
    for (long x = 0; x < w; ++x) {
        for (long y = 0; y < h; ++y) {
            if (!cell(x, y)) {
                continue;
            }
            ++g.area;
            boundary_edges += !cell(x - 1, y) + !cell(x + 1, y) + !cell(x, y - 1) + !cell(x, y + 1);
        }
    }
    g.sper = boundary_edges / 2;
    for (long x = 1; x < w; ++x) {
        for (long y = 1; y < h; ++y) {
            g.inter += cell(x - 1, y - 1) && cell(x, y - 1) && cell(x - 1, y) && cell(x, y);
        }
    }
    return g;
}

} // namespace test_oracle
