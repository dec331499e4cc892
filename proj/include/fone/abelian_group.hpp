#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fone {

class group_axiom_error : public std::invalid_argument {
public:
    group_axiom_error(std::string axiom, std::vector<int> witness)
        : std::invalid_argument(describe(axiom, witness)), axiom_(std::move(axiom)),
          witness_(std::move(witness))
    {
    }

    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    static std::string describe(const std::string& axiom, const std::vector<int>& w)
    {
        std::string s = "table violates " + axiom + " at (";
        for (std::size_t i = 0; i < w.size(); ++i)
            s += (i ? "," : "") + std::to_string(w[i]);
        return s + ")";
    }

    std::string axiom_;
    std::vector<int> witness_;
};

/// Finite abelian group on {0, ..., order-1} given by its addition table.
class FiniteAbelianGroup {
public:
    /// Validates closure, identity, inverses, commutativity and associativity,
    /// in that order; throws group_axiom_error naming the first failure.
    static FiniteAbelianGroup from_table(std::vector<std::vector<int>> table, int zero = 0)
    {
        const int n = static_cast<int>(table.size());
        if (n == 0)
            throw group_axiom_error("non-emptiness", {});
        if (zero < 0 || zero >= n)
            throw group_axiom_error("identity", {zero});
        for (int x = 0; x < n; ++x) {
            if (static_cast<int>(table[x].size()) != n)
                throw group_axiom_error("closure", {x});
            for (int y = 0; y < n; ++y)
                if (table[x][y] < 0 || table[x][y] >= n)
                    throw group_axiom_error("closure", {x, y});
        }
        for (int x = 0; x < n; ++x)
            if (table[zero][x] != x || table[x][zero] != x)
                throw group_axiom_error("identity", {x});
        for (int x = 0; x < n; ++x) {
            bool has_inverse = false;
            for (int y = 0; y < n && !has_inverse; ++y)
                has_inverse = table[x][y] == zero;
            if (!has_inverse)
                throw group_axiom_error("inverses", {x});
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (table[x][y] != table[y][x])
                    throw group_axiom_error("commutativity", {x, y});
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (table[table[x][y]][z] != table[x][table[y][z]])
                        throw group_axiom_error("associativity", {x, y, z});
        FiniteAbelianGroup g;
        g.table_ = std::move(table);
        g.zero_ = zero;
        return g;
    }

    static FiniteAbelianGroup cyclic(int n)
    {
        if (n < 1)
            throw std::invalid_argument("cyclic: order must be positive");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                t[x][y] = (x + y) % n;
        return from_table(std::move(t));
    }

    int order() const { return static_cast<int>(table_.size()); }
    int zero() const { return zero_; }
    int add(int x, int y) const { return table_[x][y]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    FiniteAbelianGroup() = default;

    std::vector<std::vector<int>> table_;
    int zero_ = 0;
};

}  // namespace fone
