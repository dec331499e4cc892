#pragma once

// Commutative plasmas: a pointed set with a commutative multivalued
// operation x [+] y, subject to the lax identity law x in x [+] 0.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abelian_group.hpp"

namespace fone {

/// Subset of a carrier of at most 64 elements.
using Subset = std::uint64_t;

inline constexpr Subset singleton(int x) { return Subset{1} << x; }
inline constexpr bool contains(Subset s, int x) { return (s >> x) & 1U; }

class Plasma {
public:
    static constexpr int max_carrier = 64;

    Plasma(std::string name, std::vector<std::vector<Subset>> hyperop, int zero = 0)
        : name_(std::move(name)), hyperop_(std::move(hyperop)), zero_(zero)
    {
        const int n = size();
        if (n == 0 || n > max_carrier)
            throw std::invalid_argument("Plasma: carrier must have 1..64 elements");
        if (zero < 0 || zero >= n)
            throw std::invalid_argument("Plasma: zero outside carrier");
        const Subset all = n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
        for (const auto& row : hyperop_) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("Plasma: hyperoperation table is not square");
            for (Subset s : row)
                if (s & ~all)
                    throw std::invalid_argument("Plasma: hyperoperation leaves the carrier");
        }
    }

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(hyperop_.size()); }
    int zero() const { return zero_; }
    Subset op(int x, int y) const { return hyperop_[x][y]; }
    const std::vector<std::vector<Subset>>& table() const { return hyperop_; }

    friend bool operator==(const Plasma& a, const Plasma& b)
    {
        return a.hyperop_ == b.hyperop_ && a.zero_ == b.zero_;
    }

private:
    std::string name_;
    std::vector<std::vector<Subset>> hyperop_;
    int zero_ = 0;
};

struct PlasmaViolation {
    std::string axiom;
    int x = 0;
    int y = 0;

    friend bool operator==(const PlasmaViolation&, const PlasmaViolation&) = default;
};

/// Every violated axiom with its witness; empty iff p is a commutative plasma.
inline std::vector<PlasmaViolation> validate_plasma(const Plasma& p)
{
    std::vector<PlasmaViolation> out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y)
            if (p.op(x, y) != p.op(y, x))
                out.push_back({"commutativity", x, y});
    for (int x = 0; x < p.size(); ++x)
        if (!contains(p.op(x, p.zero()), x))
            out.push_back({"lax identity", x, p.zero()});
    return out;
}

/// x [+] 0 = {x} for every x. Not part of the plasma axioms.
inline bool has_strict_identity(const Plasma& p)
{
    for (int x = 0; x < p.size(); ++x)
        if (p.op(x, p.zero()) != singleton(x) || p.op(p.zero(), x) != singleton(x))
            return false;
    return true;
}

struct MorphismCheck {
    bool holds = true;
    /// Offending pair; for a zero-preservation failure both entries are the zero.
    std::optional<std::pair<int, int>> witness;

    explicit operator bool() const { return holds; }
};

/// Checks f(0) = 0 and f(x [+] y) contained in f(x) [*] f(y).
/// Throws std::invalid_argument if `f` is not total on the carrier of p.
inline MorphismCheck is_plasma_morphism(const std::vector<int>& f, const Plasma& p, const Plasma& q)
{
    if (static_cast<int>(f.size()) != p.size())
        throw std::invalid_argument("is_plasma_morphism: assignment is not total on the source");
    for (int v : f)
        if (v < 0 || v >= q.size())
            throw std::invalid_argument("is_plasma_morphism: assignment leaves the target");
    if (f[p.zero()] != q.zero())
        return {false, std::pair{p.zero(), p.zero()}};
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
            const Subset allowed = q.op(f[x], f[y]);
            const Subset source = p.op(x, y);
            for (int z = 0; z < p.size(); ++z)
                if (contains(source, z) && !contains(allowed, f[z]))
                    return {false, std::pair{x, y}};
        }
    }
    return {};
}

inline std::vector<int> compose_assignments(const std::vector<int>& g, const std::vector<int>& f)
{
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = g.at(f[i]);
    return out;
}

/// The four strict-identity plasmas on {0, 1}: Z/2, B, K, F, in that order,
/// distinguished by 1 [+] 1 = {0}, {1}, {0,1}, {} respectively.
inline std::vector<Plasma> standard_plasmas()
{
    auto on_two = [](std::string name, Subset one_plus_one) {
        return Plasma(std::move(name),
                      {{singleton(0), singleton(1)}, {singleton(1), one_plus_one}});
    };
    return {on_two("Z/2", singleton(0)), on_two("B", singleton(1)),
            on_two("K", singleton(0) | singleton(1)), on_two("F", 0)};
}

inline Plasma plasma_z2() { return standard_plasmas()[0]; }
inline Plasma plasma_f() { return standard_plasmas()[3]; }

/// A group viewed as a singleton-valued plasma.
inline Plasma plasma_of_abelian_group(const FiniteAbelianGroup& g, std::string name = "group")
{
    if (g.order() > Plasma::max_carrier)
        throw std::invalid_argument("plasma_of_abelian_group: group too large");
    std::vector<std::vector<Subset>> t(g.order(), std::vector<Subset>(g.order()));
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            t[x][y] = singleton(g.add(x, y));
    return Plasma(std::move(name), std::move(t), g.zero());
}

/// Every hyperoperation on {0, 1} with zero 0 that is a commutative plasma
/// with strict identity, found by exhausting all 4^4 tables.
inline std::vector<Plasma> classify_strict_plasmas_on_two()
{
    std::vector<Plasma> found;
    for (int code = 0; code < 256; ++code) {
        std::vector<std::vector<Subset>> t(2, std::vector<Subset>(2));
        for (int cell = 0; cell < 4; ++cell)
            t[cell / 2][cell % 2] = static_cast<Subset>((code >> (2 * cell)) & 3);
        Plasma p("candidate", std::move(t));
        if (validate_plasma(p).empty() && has_strict_identity(p))
            found.push_back(std::move(p));
    }
    return found;
}

}  // namespace fone
