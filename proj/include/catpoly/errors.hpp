#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catpoly {

// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_catalan : public error {
public:
    explicit not_catalan(std::size_t position)
        : error("not a Catalan word: violation at position " + std::to_string(position)),
          position_(position) {}

    /// 0-based index of the first offending letter.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class empty_word : public error {
public:
    empty_word() : error("statistic undefined on the empty word") {}
};

class not_in_domain : public error {
public:
    using error::error;
};

class resource_limit : public error {
public:
    using error::error;
};

class non_unit_divisor : public error {
public:
    non_unit_divisor() : error("divisor has a non-invertible constant term") {}
};

class bad_sqrt_constant_term : public error {
public:
    bad_sqrt_constant_term() : error("square root requires constant term exactly 1") {}
};

class order_mismatch : public error {
public:
    order_mismatch(std::size_t a, std::size_t b)
        : error("series order mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// An exactness guard failed: a division that must be exact was not.
class internal_inconsistency : public error {
public:
    using error::error;
};

class no_convergence : public error {
public:
    explicit no_convergence(std::size_t order)
        : error("fixed point not reached at order " + std::to_string(order)) {}
};

class depth_too_shallow : public error {
public:
    depth_too_shallow(std::size_t depth, std::size_t order)
        : error("continued fraction depth " + std::to_string(depth) + " < order " +
                std::to_string(order)) {}
};

} // namespace catpoly
