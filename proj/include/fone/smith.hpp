#pragma once

// Smith normal form over Z with checked 64-bit arithmetic.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fone {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
    }
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (auto v : data_)
            if (v != 0)
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: wider integers required");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: wider integers required");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: wider integers required");
    return r;
}

}  // namespace detail

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(a(i, k), b(k, j)));
        }
    return c;
}

/// How the pivot of each diagonal step is first chosen. The invariants do not
/// depend on it; both exist so that independence can be checked.
enum class PivotOrder { smallest_entry, first_in_column };

struct SmithForm {
    std::vector<std::int64_t> invariants;  // d_1 | d_2 | ... , all positive
    std::size_t rank = 0;
};

inline SmithForm smith_normal_form(IntMatrix m, PivotOrder order = PivotOrder::smallest_entry)
{
    using detail::checked_add;
    using detail::checked_mul;
    using detail::checked_sub;
    const std::size_t rows = m.rows(), cols = m.cols();
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(a, j), m(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(m(i, a), m(i, b));
    };

    SmithForm out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // initial pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t j = t; j < cols && (order == PivotOrder::smallest_entry || pr == rows); ++j)
            for (std::size_t i = t; i < rows; ++i) {
                if (m(i, j) == 0)
                    continue;
                if (pr == rows || std::llabs(m(i, j)) < std::llabs(m(pr, pc))) {
                    pr = i;
                    pc = j;
                    if (order == PivotOrder::first_in_column)
                        break;
                }
            }
        if (pr == rows)
            break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            // move the smallest entry of row/column t onto the diagonal
            std::size_t br = t, bc = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m(i, t) != 0 && std::llabs(m(i, t)) < std::llabs(m(br, bc))) {
                    br = i;
                    bc = t;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m(t, j) != 0 && std::llabs(m(t, j)) < std::llabs(m(br, bc))) {
                    br = t;
                    bc = j;
                }
            swap_rows(t, br);
            swap_cols(t, bc);

            const std::int64_t p = m(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0)
                    continue;
                const std::int64_t q = m(i, t) / p;
                for (std::size_t j = t; j < cols; ++j)
                    m(i, j) = checked_sub(m(i, j), checked_mul(q, m(t, j)));
                clean = clean && m(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0)
                    continue;
                const std::int64_t q = m(t, j) / p;
                for (std::size_t i = t; i < rows; ++i)
                    m(i, j) = checked_sub(m(i, j), checked_mul(q, m(i, t)));
                clean = clean && m(t, j) == 0;
            }
            if (!clean)
                continue;
            // enforce divisibility of the remaining block by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                m(t, j) = checked_add(m(t, j), m(bad, j));
        }
        out.invariants.push_back(std::llabs(m(t, t)));
        ++out.rank;
    }
    return out;
}

}  // namespace fone
