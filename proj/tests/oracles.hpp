#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "fone/finset.hpp"
#include "fone/smith.hpp"

namespace oracle {

/// The circle as the quotient of Delta^1: an m-simplex is a monotone map
/// [m] -> [1], constants are the basepoint, and alpha acts by precomposition.
/// Returns the induced map on non-constant maps, indexed by where they jump.
inline std::vector<int> circle_action(const fone::DeltaMap& alpha)
{
    const int a = alpha.domain(), b = alpha.codomain();
    std::vector<std::vector<int>> source, target;
    for (int jump = 1; jump <= b; ++jump) {
        std::vector<int> x(b + 1);
        for (int t = 0; t <= b; ++t)
            x[t] = t >= jump ? 1 : 0;
        source.push_back(x);
    }
    std::map<std::vector<int>, int> index;
    for (int jump = 1; jump <= a; ++jump) {
        std::vector<int> x(a + 1);
        for (int t = 0; t <= a; ++t)
            x[t] = t >= jump ? 1 : 0;
        index[x] = jump;
    }
    std::vector<int> out;
    for (const auto& x : source) {
        std::vector<int> pulled(a + 1);
        for (int t = 0; t <= a; ++t)
            pulled[t] = x[alpha(t)];
        out.push_back(pulled.front() == pulled.back() ? 0 : index.at(pulled));
    }
    return out;
}

/// Smash of pointed maps through an explicit table of pairs, enumerated
/// lexicographically.
inline fone::PointedMap smash_by_pairs(const fone::PointedMap& f, const fone::PointedMap& g)
{
    auto table = [](int p, int q) {
        std::map<std::pair<int, int>, int> idx;
        int next = 1;
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
                idx[{i, j}] = next++;
        return idx;
    };
    const auto src = table(f.domain(), g.domain());
    const auto tgt = table(f.codomain(), g.codomain());
    std::vector<int> out(src.size());
    for (const auto& [pair, code] : src) {
        const int x = f(pair.first), y = g(pair.second);
        out[code - 1] = (x == 0 || y == 0) ? 0 : tgt.at({x, y});
    }
    return {f.domain() * g.domain(), f.codomain() * g.codomain(), out};
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(std::llabs(a), std::llabs(b)); }

/// Exact determinant by cofactor expansion; fine for the tiny minors used here.
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        sum += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
    }
    return sum;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors as ratios of determinantal divisors d_k = gcd of k x k minors.
inline std::vector<std::int64_t> invariant_factors(const fone::IntMatrix& m)
{
    std::vector<std::int64_t> divisors{1};
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rows, cols;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rows);
        subsets(m.cols(), k, 0, cur, cols);
        std::int64_t g = 0;
        for (const auto& r : rows)
            for (const auto& c : cols) {
                std::vector<std::vector<std::int64_t>> minor(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = m(r[i], c[j]);
                g = gcd(g, det(minor));
            }
        if (g == 0)
            break;
        divisors.push_back(g);
    }
    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k < divisors.size(); ++k)
        out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

/// Rank of an integer matrix over Z/p by Gaussian elimination.
inline std::size_t rank_mod(const fone::IntMatrix& m, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = ((m(i, j) % p) + p) % p;
    auto inverse = [p](std::int64_t x) {
        std::int64_t r = 1, e = p - 2;
        for (; e; e >>= 1, x = x * x % p)
            if (e & 1)
                r = r * x % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t inv = inverse(a[rank][c]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][c] == 0)
                continue;
            const std::int64_t f = a[i][c] * inv % p;
            for (std::size_t j = c; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
