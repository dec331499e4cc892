#pragma once

// Finite truncations of functors into pointed sets, and a backtracking search
// for natural isomorphisms between two such truncations.
//
// A truncation is a list of levels (finite pointed sets, element 0 the
// basepoint) and a list of arrows between levels, each carrying the function
// the functor assigns to it. Two truncations are compared arrow by arrow, so
// both must be built from the same level and arrow indexing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finset.hpp"

namespace fone {

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

/// Level and arrow indexing shared by the two sides of a comparison.
struct DiagramShape {
    std::vector<std::string> level_names;
    std::vector<Arrow> arrows;
};

/// A functor evaluated on a DiagramShape.
struct TruncatedDiagram {
    std::vector<std::size_t> sizes;
    std::vector<FinFunction> maps;  // parallel to DiagramShape::arrows
};

/// Levelwise bijections, indexed like DiagramShape::level_names.
using LevelwiseMap = std::vector<FinFunction>;

struct IsoResult {
    std::optional<LevelwiseMap> iso;
    std::string witness;  // why no isomorphism exists, when iso is empty

    explicit operator bool() const { return iso.has_value(); }
};

/// Checks that `maps` is well formed and pointed on every arrow.
inline std::optional<std::string> check_diagram(const DiagramShape& shape, const TruncatedDiagram& d)
{
    for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
        const Arrow& arr = shape.arrows[a];
        const FinFunction& f = d.maps[a];
        if (f.size() != d.sizes[arr.source])
            return "arrow " + arr.label + " at " + shape.level_names[arr.source] +
                   " has the wrong domain size";
        if (!f.empty() && f[0] != basepoint)
            return "arrow " + arr.label + " at " + shape.level_names[arr.source] +
                   " does not preserve the basepoint";
        for (Element v : f)
            if (v >= d.sizes[arr.target])
                return "arrow " + arr.label + " at " + shape.level_names[arr.source] +
                       " leaves its codomain";
    }
    return std::nullopt;
}

/// Verifies that `phi` is a natural transformation between the two diagrams;
/// returns the first failing arrow.
inline std::optional<std::string> check_natural(const DiagramShape& shape, const TruncatedDiagram& x,
                                                const TruncatedDiagram& y, const LevelwiseMap& phi)
{
    for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
        const Arrow& arr = shape.arrows[a];
        const FinFunction& fx = x.maps[a];
        const FinFunction& fy = y.maps[a];
        for (std::size_t e = 0; e < fx.size(); ++e)
            if (phi[arr.target][fx[e]] != fy[phi[arr.source][e]])
                return "naturality fails for " + arr.label + " from " +
                       shape.level_names[arr.source] + " at element " + std::to_string(e);
    }
    return std::nullopt;
}

namespace detail {

class IsoSearch {
public:
    IsoSearch(const DiagramShape& shape, const TruncatedDiagram& x, const TruncatedDiagram& y)
        : shape_(shape), x_(x), y_(y), out_(shape.level_names.size())
    {
        for (std::size_t a = 0; a < shape.arrows.size(); ++a)
            out_[shape.arrows[a].source].push_back(a);
        const std::size_t levels = x.sizes.size();
        phi_.resize(levels);
        inv_.resize(levels);
        sig_x_.resize(levels);
        sig_y_.resize(levels);
        for (std::size_t l = 0; l < levels; ++l) {
            phi_[l].assign(x.sizes[l], unset);
            inv_[l].assign(y.sizes[l], unset);
            sig_x_[l] = signatures(x_, l);
            sig_y_[l] = signatures(y_, l);
        }
    }

    IsoResult run()
    {
        for (std::size_t l = 0; l < phi_.size(); ++l) {
            auto sx = sig_x_[l], sy = sig_y_[l];
            std::sort(sx.begin(), sx.end());
            std::sort(sy.begin(), sy.end());
            if (sx != sy)
                return {std::nullopt, "element invariants differ at " + shape_.level_names[l]};
        }
        for (std::size_t l = 0; l < phi_.size(); ++l)
            if (!phi_[l].empty() && !assign(l, 0, 0))
                return {std::nullopt, failure_};
        if (!extend(0, 0)) {
            if (failure_.empty())
                failure_ = "no natural bijection exists";
            return {std::nullopt, failure_};
        }
        return {phi_, {}};
    }

private:
    static constexpr Element unset = static_cast<Element>(-1);

    // For each element, a hash of which outgoing arrows send it to the basepoint.
    std::vector<std::uint64_t> signatures(const TruncatedDiagram& d, std::size_t level) const
    {
        std::vector<std::uint64_t> sig(d.sizes[level], 0xcbf29ce484222325ULL);
        for (std::size_t a : out_[level])
            for (std::size_t e = 0; e < sig.size(); ++e)
                sig[e] = (sig[e] ^ (d.maps[a][e] == basepoint ? 0x9e37ULL : 0x51ULL)) *
                         0x100000001b3ULL;
        return sig;
    }

    bool assign(std::size_t level, Element e, Element v)
    {
        std::vector<std::pair<std::size_t, Element>> queue;
        auto set = [&](std::size_t l, Element a, Element b) {
            if (phi_[l][a] != unset)
                return phi_[l][a] == b;
            if (inv_[l][b] != unset)
                return false;
            phi_[l][a] = b;
            inv_[l][b] = a;
            trail_.emplace_back(l, a);
            queue.emplace_back(l, a);
            return true;
        };
        if (!set(level, e, v)) {
            failure_ = "conflict at " + shape_.level_names[level];
            return false;
        }
        while (!queue.empty()) {
            auto [l, a] = queue.back();
            queue.pop_back();
            const Element b = phi_[l][a];
            for (std::size_t arr : out_[l]) {
                const std::size_t t = shape_.arrows[arr].target;
                if (!set(t, x_.maps[arr][a], y_.maps[arr][b])) {
                    failure_ = "conflict along " + shape_.arrows[arr].label + " from " +
                               shape_.level_names[l] + " into " + shape_.level_names[t];
                    return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            auto [l, a] = trail_.back();
            trail_.pop_back();
            inv_[l][phi_[l][a]] = unset;
            phi_[l][a] = unset;
        }
    }

    bool extend(std::size_t level, std::size_t elem)
    {
        while (level < phi_.size()) {
            while (elem < phi_[level].size() && phi_[level][elem] != unset)
                ++elem;
            if (elem < phi_[level].size())
                break;
            ++level;
            elem = 0;
        }
        if (level == phi_.size())
            return true;
        for (std::size_t cand = 0; cand < inv_[level].size(); ++cand) {
            if (inv_[level][cand] != unset || sig_y_[level][cand] != sig_x_[level][elem])
                continue;
            const std::size_t mark = trail_.size();
            if (assign(level, static_cast<Element>(elem), static_cast<Element>(cand)) &&
                extend(level, elem + 1))
                return true;
            undo(mark);
        }
        failure_ = "no candidate image for element " + std::to_string(elem) + " at " +
                   shape_.level_names[level] + " (last " + failure_ + ")";
        return false;
    }

    const DiagramShape& shape_;
    const TruncatedDiagram& x_;
    const TruncatedDiagram& y_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<FinFunction> phi_;
    std::vector<FinFunction> inv_;
    std::vector<std::vector<std::uint64_t>> sig_x_;
    std::vector<std::vector<std::uint64_t>> sig_y_;
    std::vector<std::pair<std::size_t, Element>> trail_;
    std::string failure_;
};

}  // namespace detail

/// Deterministic search for a natural isomorphism x => y over `shape`.
/// Basepoints are matched to basepoints; every other choice is propagated
/// along all outgoing arrows before the next choice is made.
inline IsoResult find_isomorphism(const DiagramShape& shape, const TruncatedDiagram& x,
                                  const TruncatedDiagram& y)
{
    for (std::size_t l = 0; l < x.sizes.size(); ++l)
        if (x.sizes[l] != y.sizes[l])
            return {std::nullopt, "sizes differ at " + shape.level_names[l] + ": " +
                                      std::to_string(x.sizes[l]) + " vs " +
                                      std::to_string(y.sizes[l])};
    if (auto bad = check_diagram(shape, x))
        return {std::nullopt, "left side: " + *bad};
    if (auto bad = check_diagram(shape, y))
        return {std::nullopt, "right side: " + *bad};
    IsoResult r = detail::IsoSearch(shape, x, y).run();
    if (r.iso) {
        if (auto bad = check_natural(shape, x, y, *r.iso))
            return {std::nullopt, "internal: " + *bad};
    }
    return r;
}

}  // namespace fone
