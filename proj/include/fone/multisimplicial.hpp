#pragma once

// n-fold simplicial Gamma-sets, i.e. functors (Delta^op)^n x Fin_* -> Set_*,
// the delooping B that adds one simplicial coordinate, and the objects it
// is compared against: spheres, cube quotients and fold constructions.
//
// Conventions: an action takes one DeltaMap alpha_i : [a_i] -> [b_i] per
// simplicial coordinate and one PointedMap f : <m> -> <m'>, and maps the
// value at ([b_1..b_n], <m>) to the value at ([a_1..a_n], <m'>).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "diagram.hpp"
#include "finset.hpp"
#include "gamma.hpp"
#include "memo.hpp"
#include "report.hpp"

namespace fone {

struct MultiDegree {
    std::vector<int> simplicial;
    int gamma = 0;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

inline std::string degree_string(const std::vector<int>& ks)
{
    std::string s = "[";
    for (std::size_t i = 0; i < ks.size(); ++i)
        s += (i ? "," : "") + std::to_string(ks[i]);
    return s + "]";
}

inline std::string degree_string(const std::vector<int>& ks, int m)
{
    return "(" + degree_string(ks) + ",<" + std::to_string(m) + ">)";
}

inline std::vector<DeltaMap> identities(const std::vector<int>& ks)
{
    std::vector<DeltaMap> out;
    out.reserve(ks.size());
    for (int k : ks)
        out.push_back(DeltaMap::identity(k));
    return out;
}

inline std::vector<int> domains(std::span<const DeltaMap> alphas)
{
    std::vector<int> out;
    for (const auto& a : alphas)
        out.push_back(a.domain());
    return out;
}

inline std::vector<int> codomains(std::span<const DeltaMap> alphas)
{
    std::vector<int> out;
    for (const auto& a : alphas)
        out.push_back(a.codomain());
    return out;
}

/// All multidegrees in [0..K]^n, lexicographic.
inline std::vector<std::vector<int>> degrees_within(int arity, int k_max)
{
    std::vector<std::vector<int>> out;
    std::vector<int> ks(arity, 0);
    while (true) {
        out.push_back(ks);
        int pos = arity - 1;
        while (pos >= 0 && ks[pos] == k_max) {
            ks[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++ks[pos];
    }
    return out;
}

class MultiSimplicialGammaSet {
public:
    using SizeFn = std::function<std::size_t(const std::vector<int>&, int)>;
    using ActionFn = std::function<FinFunction(std::span<const DeltaMap>, const PointedMap&)>;
    using PointFn =
        std::function<Element(std::span<const DeltaMap>, const PointedMap&, Element)>;

    MultiSimplicialGammaSet(std::string name, int arity, SizeFn size, ActionFn action,
                            PointFn point = {})
        : impl_(std::make_shared<const Impl>(std::move(name), arity, std::move(size),
                                             std::move(action), std::move(point)))
    {
    }

    const std::string& name() const { return impl_->name; }
    int arity() const { return impl_->arity; }

    std::size_t size(const std::vector<int>& ks, int m) const
    {
        return impl_->sizes.get(MultiDegree{ks, m}, [this](const MultiDegree& d) {
            return impl_->size(d.simplicial, d.gamma);
        });
    }
    std::size_t size(const MultiDegree& d) const { return size(d.simplicial, d.gamma); }

    FinFunction act(std::span<const DeltaMap> alphas, const PointedMap& f) const
    {
        if (static_cast<int>(alphas.size()) != arity())
            throw std::invalid_argument("act: expected one simplicial operator per coordinate");
        return impl_->action(alphas, f);
    }

    /// X(alphas, f)(e) without building the whole table when a pointwise rule exists.
    Element act_at(std::span<const DeltaMap> alphas, const PointedMap& f, Element e) const
    {
        if (static_cast<int>(alphas.size()) != arity())
            throw std::invalid_argument("act_at: expected one simplicial operator per coordinate");
        if (impl_->point)
            return impl_->point(alphas, f, e);
        return impl_->action(alphas, f).at(e);
    }

    /// Action of alpha in simplicial coordinate `coord` at source degree (ks, <m>).
    FinFunction act_simplicial(const std::vector<int>& ks, int m, int coord,
                               const DeltaMap& alpha) const
    {
        auto alphas = identities(ks);
        alphas.at(coord) = alpha;
        return act(alphas, PointedMap::identity(m));
    }

    FinFunction act_gamma(const std::vector<int>& ks, const PointedMap& f) const
    {
        return act(identities(ks), f);
    }

private:
    struct Impl {
        Impl(std::string n, int a, SizeFn s, ActionFn f, PointFn p)
            : name(std::move(n)), arity(a), size(std::move(s)), action(std::move(f)),
              point(std::move(p))
        {
        }

        std::string name;
        int arity;
        SizeFn size;
        ActionFn action;
        PointFn point;
        detail::Memo<MultiDegree, std::size_t> sizes;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Functor (Delta^op)^n -> Set_*.
class MultiSimplicialPointedSet {
public:
    using SizeFn = std::function<std::size_t(const std::vector<int>&)>;
    using ActionFn = std::function<FinFunction(std::span<const DeltaMap>)>;

    MultiSimplicialPointedSet(std::string name, int arity, SizeFn size, ActionFn action)
        : impl_(std::make_shared<const Impl>(std::move(name), arity, std::move(size),
                                             std::move(action)))
    {
    }

    const std::string& name() const { return impl_->name; }
    int arity() const { return impl_->arity; }

    std::size_t size(const std::vector<int>& ks) const
    {
        return impl_->sizes.get(ks, [this](const std::vector<int>& d) { return impl_->size(d); });
    }

    FinFunction act(std::span<const DeltaMap> alphas) const
    {
        if (static_cast<int>(alphas.size()) != arity())
            throw std::invalid_argument("act: expected one simplicial operator per coordinate");
        return impl_->action(alphas);
    }

    FinFunction act_simplicial(const std::vector<int>& ks, int coord, const DeltaMap& alpha) const
    {
        auto alphas = identities(ks);
        alphas.at(coord) = alpha;
        return act(alphas);
    }

private:
    struct Impl {
        Impl(std::string n, int a, SizeFn s, ActionFn f)
            : name(std::move(n)), arity(a), size(std::move(s)), action(std::move(f))
        {
        }

        std::string name;
        int arity;
        SizeFn size;
        ActionFn action;
        detail::Memo<std::vector<int>, std::size_t> sizes;
    };
    std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------------------
// Constructions

/// A Gamma-set as a 0-fold simplicial Gamma-set.
inline MultiSimplicialGammaSet lift(const GammaSet& x)
{
    return MultiSimplicialGammaSet(
        x.name(), 0, [x](const std::vector<int>&, int m) { return x.size(m); },
        [x](std::span<const DeltaMap>, const PointedMap& f) { return x.act(f); },
        x.has_pointwise_action()
            ? MultiSimplicialGammaSet::PointFn(
                  [x](std::span<const DeltaMap>, const PointedMap& f, Element e) {
                      return x.act_at(f, e);
                  })
            : MultiSimplicialGammaSet::PointFn{});
}

/// X viewed as constant in `arity` simplicial directions.
inline MultiSimplicialGammaSet simplicially_constant(const GammaSet& x, int arity)
{
    return MultiSimplicialGammaSet(
        "const(" + x.name() + ")", arity, [x](const std::vector<int>&, int m) { return x.size(m); },
        [x](std::span<const DeltaMap>, const PointedMap& f) { return x.act(f); });
}

/// BX(ks ++ [k], <m>) = X(ks, s[k] ^ <m>); the new coordinate is appended last.
inline MultiSimplicialGammaSet deloop(const MultiSimplicialGammaSet& x)
{
    return MultiSimplicialGammaSet(
        "B" + x.name(), x.arity() + 1,
        [x](const std::vector<int>& ks, int m) {
            std::vector<int> inner(ks.begin(), ks.end() - 1);
            return x.size(inner, s_on_object(ks.back()).size * m);
        },
        [x](std::span<const DeltaMap> alphas, const PointedMap& f) {
            return x.act(alphas.first(alphas.size() - 1), smash(s_on_map(alphas.back()), f));
        },
        [x](std::span<const DeltaMap> alphas, const PointedMap& f, Element e) {
            return x.act_at(alphas.first(alphas.size() - 1), smash(s_on_map(alphas.back()), f), e);
        });
}

inline MultiSimplicialGammaSet deloop_n(MultiSimplicialGammaSet x, int n)
{
    if (n < 0)
        throw std::invalid_argument("deloop_n: negative iteration count");
    for (int i = 0; i < n; ++i)
        x = deloop(x);
    return x;
}

/// B^n F1.
inline MultiSimplicialGammaSet delooped_f1(int n) { return deloop_n(lift(f1()), n); }

/// Restriction of the last simplicial coordinate to [1].
inline MultiSimplicialGammaSet evaluate_at_one(const MultiSimplicialGammaSet& x)
{
    if (x.arity() < 1)
        throw std::invalid_argument("evaluate_at_one: arity must be at least 1");
    return MultiSimplicialGammaSet(
        "ev1(" + x.name() + ")", x.arity() - 1,
        [x](const std::vector<int>& ks, int m) {
            auto full = ks;
            full.push_back(1);
            return x.size(full, m);
        },
        [x](std::span<const DeltaMap> alphas, const PointedMap& f) {
            std::vector<DeltaMap> full(alphas.begin(), alphas.end());
            full.push_back(DeltaMap::identity(1));
            return x.act(full, f);
        });
}

/// Levelwise product; (x, y) has index x * |Y| + y.
inline MultiSimplicialGammaSet product(const MultiSimplicialGammaSet& x,
                                       const MultiSimplicialGammaSet& y)
{
    if (x.arity() != y.arity())
        throw std::invalid_argument("product: arities differ");
    return MultiSimplicialGammaSet(
        x.name() + "x" + y.name(), x.arity(),
        [x, y](const std::vector<int>& ks, int m) { return x.size(ks, m) * y.size(ks, m); },
        [x, y](std::span<const DeltaMap> alphas, const PointedMap& f) {
            const FinFunction fx = x.act(alphas, f), fy = y.act(alphas, f);
            const std::size_t ys = fy.size(), yt = y.size(domains(alphas), f.codomain());
            FinFunction out(fx.size() * ys);
            for (std::size_t a = 0; a < fx.size(); ++a)
                for (std::size_t b = 0; b < ys; ++b)
                    out[a * ys + b] = static_cast<Element>(fx[a] * yt + fy[b]);
            return out;
        });
}

inline MultiSimplicialPointedSet product(const MultiSimplicialPointedSet& x,
                                         const MultiSimplicialPointedSet& y)
{
    if (x.arity() != y.arity())
        throw std::invalid_argument("product: arities differ");
    return MultiSimplicialPointedSet(
        x.name() + "x" + y.name(), x.arity(),
        [x, y](const std::vector<int>& ks) { return x.size(ks) * y.size(ks); },
        [x, y](std::span<const DeltaMap> alphas) {
            const FinFunction fx = x.act(alphas), fy = y.act(alphas);
            const std::size_t ys = fy.size(), yt = y.size(domains(alphas));
            FinFunction out(fx.size() * ys);
            for (std::size_t a = 0; a < fx.size(); ++a)
                for (std::size_t b = 0; b < ys; ++b)
                    out[a * ys + b] = static_cast<Element>(fx[a] * yt + fy[b]);
            return out;
        });
}

/// The n-fold simplicial pointed set X(-, <k>).
inline MultiSimplicialPointedSet at_gamma_level(const MultiSimplicialGammaSet& x, int k)
{
    return MultiSimplicialPointedSet(
        x.name() + "<" + std::to_string(k) + ">", x.arity(),
        [x, k](const std::vector<int>& ks) { return x.size(ks, k); },
        [x, k](std::span<const DeltaMap> alphas) {
            return x.act(alphas, PointedMap::identity(k));
        });
}

/// External smash of n simplicial circles: value <k_1 ... k_n>.
inline MultiSimplicialPointedSet sphere(int n)
{
    if (n < 0)
        throw std::invalid_argument("sphere: negative dimension");
    return MultiSimplicialPointedSet(
        "S" + std::to_string(n), n,
        [](const std::vector<int>& ks) {
            std::size_t p = 1;
            for (int k : ks)
                p *= static_cast<std::size_t>(k);
            return p + 1;
        },
        [](std::span<const DeltaMap> alphas) {
            PointedMap acc = PointedMap::identity(1);
            for (const auto& a : alphas)
                acc = smash(acc, s_on_map(a));
            return to_fin_function(acc);
        });
}

/// The n-cube (external product of n copies of Delta^1) with every tuple
/// having a constant coordinate collapsed to the basepoint.
inline MultiSimplicialPointedSet cube_quotient(int n)
{
    if (n < 0)
        throw std::invalid_argument("cube_quotient: negative dimension");
    using Cell = std::vector<std::vector<int>>;  // one monotone [k_i] -> [1] per coordinate
    auto interior = [](const std::vector<int>& ks) {
        // Non-constant monotone maps in each coordinate, lexicographic tuples.
        std::vector<Cell> cells{Cell{}};
        for (int k : ks) {
            std::vector<Cell> next;
            for (const auto& c : cells)
                for (const auto& x : enumerate_delta_maps(k, 1)) {
                    if (x(0) == x(k))
                        continue;
                    Cell d = c;
                    d.push_back(x.values());
                    next.push_back(std::move(d));
                }
            cells = std::move(next);
        }
        return cells;
    };
    return MultiSimplicialPointedSet(
        "Cube" + std::to_string(n) + "/boundary", n,
        [interior](const std::vector<int>& ks) { return interior(ks).size() + 1; },
        [interior](std::span<const DeltaMap> alphas) {
            const auto src = interior(codomains(alphas));
            const auto tgt = interior(domains(alphas));
            std::map<Cell, Element> index;
            for (std::size_t i = 0; i < tgt.size(); ++i)
                index.emplace(tgt[i], static_cast<Element>(i + 1));
            FinFunction out(src.size() + 1, basepoint);
            for (std::size_t i = 0; i < src.size(); ++i) {
                Cell img;
                bool boundary = false;
                for (std::size_t c = 0; c < alphas.size(); ++c) {
                    const DeltaMap x(alphas[c].codomain(), 1, src[i][c]);
                    const DeltaMap pulled = compose(x, alphas[c]);
                    boundary = boundary || pulled(0) == pulled(pulled.domain());
                    img.push_back(pulled.values());
                }
                out[i + 1] = boundary ? basepoint : index.at(img);
            }
            return out;
        });
}

/// S^vee: <k> |-> k-fold wedge of S, Fin_* relabelling and folding summands.
/// Element (summand i, e != *) has index (i-1)(|S|-1) + e.
inline MultiSimplicialGammaSet fold_construction(const MultiSimplicialPointedSet& s)
{
    return MultiSimplicialGammaSet(
        "(" + s.name() + ")^vee", s.arity(),
        [s](const std::vector<int>& ks, int m) {
            return 1 + static_cast<std::size_t>(m) * (s.size(ks) - 1);
        },
        [s](std::span<const DeltaMap> alphas, const PointedMap& f) {
            const FinFunction sa = s.act(alphas);
            const std::size_t src = sa.size() - 1;
            const std::size_t tgt = s.size(domains(alphas)) - 1;
            FinFunction out(1 + static_cast<std::size_t>(f.domain()) * src, basepoint);
            for (int i = 1; i <= f.domain(); ++i)
                for (std::size_t e = 1; e <= src; ++e) {
                    if (f(i) == 0 || sa[e] == basepoint)
                        continue;
                    out[(i - 1) * src + e] = static_cast<Element>((f(i) - 1) * tgt + sa[e]);
                }
            return out;
        });
}

inline MultiSimplicialPointedSet wedge_power(const MultiSimplicialPointedSet& s, int k)
{
    return at_gamma_level(fold_construction(s), k);
}

/// K(A, n) = B^n HA.
inline MultiSimplicialGammaSet em_deloop(const FiniteAbelianGroup& a, int n, std::string name = "HA")
{
    return deloop_n(lift(eilenberg_maclane(a, std::move(name))), n);
}

// ---------------------------------------------------------------------------
// Natural transformations

/// Component at each multidegree (ks, <m>).
struct MultiTransformation {
    std::function<FinFunction(const std::vector<int>&, int)> component;
};

inline MultiTransformation lift(const GammaTransformation& eta)
{
    return {[eta](const std::vector<int>&, int m) { return eta.component(m); }};
}

/// B applied to a transformation: the component at (ks ++ [k], <m>) is the
/// component at (ks, <k m>).
inline MultiTransformation deloop(const MultiTransformation& eta)
{
    return {[eta](const std::vector<int>& ks, int m) {
        std::vector<int> inner(ks.begin(), ks.end() - 1);
        return eta.component(inner, ks.back() * m);
    }};
}

// ---------------------------------------------------------------------------
// Truncations

/// Levels (ks, <m>) with every k_i <= K and m <= T, and every single-coordinate
/// arrow between them: all monotone maps of [0..K] in each simplicial
/// coordinate and all pointed maps of <0..T> in the Gamma coordinate. With
/// T < 0 the Gamma coordinate is absent (pointed multisimplicial sets).
class MultiTruncation {
public:
    struct ArrowSpec {
        std::vector<int> degree;  // source simplicial degree
        int gamma = 0;            // source Gamma level
        int coordinate = 0;       // simplicial coordinate, or arity for the Gamma coordinate
        std::size_t morphism = 0; // index into delta_maps() or gamma_maps()
    };

    MultiTruncation(int arity, int k_max, int t_max) : arity_(arity), k_(k_max), t_(t_max)
    {
        for (int a = 0; a <= k_; ++a)
            for (int b = 0; b <= k_; ++b)
                for (auto& d : enumerate_delta_maps(a, b))
                    delta_.push_back(std::move(d));
        for (int a = 0; a <= t_; ++a)
            for (int b = 0; b <= t_; ++b)
                for (auto& f : enumerate_ptd_maps(a, b))
                    gamma_.push_back(std::move(f));
        degrees_ = degrees_within(arity_, k_);
        for (const auto& ks : degrees_)
            for (int m = 0; m <= std::max(t_, 0); ++m)
                shape_.level_names.push_back(has_gamma() ? degree_string(ks, m)
                                                         : degree_string(ks));
        for (std::size_t di = 0; di < degrees_.size(); ++di) {
            const auto& ks = degrees_[di];
            for (int m = 0; m <= std::max(t_, 0); ++m) {
                const std::size_t src = level(ks, m);
                for (int c = 0; c < arity_; ++c)
                    for (std::size_t i = 0; i < delta_.size(); ++i) {
                        if (delta_[i].codomain() != ks[c])
                            continue;
                        auto tk = ks;
                        tk[c] = delta_[i].domain();
                        add_arrow({ks, m, c, i}, src, level(tk, m), to_string(delta_[i]) +
                                                                      " in coordinate " +
                                                                      std::to_string(c + 1));
                    }
                if (!has_gamma())
                    continue;
                for (std::size_t i = 0; i < gamma_.size(); ++i)
                    if (gamma_[i].domain() == m)
                        add_arrow({ks, m, arity_, i}, src, level(ks, gamma_[i].codomain()),
                                  to_string(gamma_[i]));
            }
        }
    }

    int arity() const { return arity_; }
    int k_max() const { return k_; }
    int t_max() const { return t_; }
    bool has_gamma() const { return t_ >= 0; }
    const std::vector<std::vector<int>>& degrees() const { return degrees_; }
    const DiagramShape& shape() const { return shape_; }
    const std::vector<ArrowSpec>& specs() const { return specs_; }
    const std::vector<DeltaMap>& delta_maps() const { return delta_; }
    const std::vector<PointedMap>& gamma_maps() const { return gamma_; }

    std::size_t level(const std::vector<int>& ks, int m) const
    {
        std::size_t idx = 0;
        for (int k : ks)
            idx = idx * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(k);
        return idx * static_cast<std::size_t>(std::max(t_, 0) + 1) + static_cast<std::size_t>(m);
    }

    std::string scope() const
    {
        std::string s = "K=" + std::to_string(k_);
        if (has_gamma())
            s += ", T=" + std::to_string(t_);
        return s;
    }

    /// Alphas and pointed map realizing an arrow.
    std::pair<std::vector<DeltaMap>, PointedMap> operators(const ArrowSpec& a) const
    {
        auto alphas = identities(a.degree);
        PointedMap f = PointedMap::identity(a.gamma);
        if (a.coordinate < arity_)
            alphas[a.coordinate] = delta_[a.morphism];
        else
            f = gamma_[a.morphism];
        return {std::move(alphas), std::move(f)};
    }

    TruncatedDiagram evaluate(const MultiSimplicialGammaSet& x) const
    {
        TruncatedDiagram d;
        for (const auto& ks : degrees_)
            for (int m = 0; m <= t_; ++m)
                d.sizes.push_back(x.size(ks, m));
        for (const auto& a : specs_) {
            auto [alphas, f] = operators(a);
            d.maps.push_back(x.act(alphas, f));
        }
        return d;
    }

    TruncatedDiagram evaluate(const MultiSimplicialPointedSet& x) const
    {
        TruncatedDiagram d;
        for (const auto& ks : degrees_)
            d.sizes.push_back(x.size(ks));
        for (const auto& a : specs_)
            d.maps.push_back(x.act(operators(a).first));
        return d;
    }

private:
    void add_arrow(ArrowSpec spec, std::size_t src, std::size_t tgt, std::string label)
    {
        specs_.push_back(std::move(spec));
        shape_.arrows.push_back({src, tgt, std::move(label)});
    }

    int arity_;
    int k_;
    int t_;
    std::vector<DeltaMap> delta_;
    std::vector<PointedMap> gamma_;
    std::vector<std::vector<int>> degrees_;
    DiagramShape shape_;
    std::vector<ArrowSpec> specs_;
};

inline IsoResult multisimp_iso_on_truncation(const MultiSimplicialGammaSet& x,
                                             const MultiSimplicialGammaSet& y, int k_max, int t_max)
{
    if (x.arity() != y.arity())
        return {std::nullopt, "arities differ"};
    MultiTruncation tr(x.arity(), k_max, t_max);
    return find_isomorphism(tr.shape(), tr.evaluate(x), tr.evaluate(y));
}

inline IsoResult multisimp_iso_on_truncation(const MultiSimplicialPointedSet& x,
                                             const MultiSimplicialPointedSet& y, int k_max)
{
    if (x.arity() != y.arity())
        return {std::nullopt, "arities differ"};
    MultiTruncation tr(x.arity(), k_max, -1);
    return find_isomorphism(tr.shape(), tr.evaluate(x), tr.evaluate(y));
}

// ---------------------------------------------------------------------------
// Degeneracy

/// True iff e is s_j of some element one level lower in some coordinate.
inline bool is_degenerate(const MultiSimplicialPointedSet& x, const std::vector<int>& ks, Element e)
{
    for (int c = 0; c < x.arity(); ++c) {
        if (ks[c] == 0)
            continue;
        auto lower = ks;
        --lower[c];
        for (int j = 0; j < ks[c]; ++j) {
            const FinFunction s = x.act_simplicial(lower, c, DeltaMap::codegeneracy(j, ks[c] - 1));
            if (std::find(s.begin(), s.end(), e) != s.end())
                return true;
        }
    }
    return false;
}

/// Non-basepoint elements of x at ks outside every degeneracy image.
inline std::vector<Element> nondegenerate_elements(const MultiSimplicialPointedSet& x,
                                                   const std::vector<int>& ks)
{
    std::vector<char> degenerate(x.size(ks), 0);
    degenerate[basepoint] = 1;
    for (int c = 0; c < x.arity(); ++c) {
        if (ks[c] == 0)
            continue;
        auto lower = ks;
        --lower[c];
        for (int j = 0; j < ks[c]; ++j)
            for (Element v : x.act_simplicial(lower, c, DeltaMap::codegeneracy(j, ks[c] - 1)))
                degenerate[v] = 1;
    }
    std::vector<Element> out;
    for (std::size_t e = 0; e < degenerate.size(); ++e)
        if (!degenerate[e])
            out.push_back(static_cast<Element>(e));
    return out;
}

using Census = std::map<std::vector<int>, std::size_t>;

/// Non-degenerate non-basepoint count at every multidegree within K.
inline Census nondegenerate_census(const MultiSimplicialPointedSet& x, int k_max)
{
    Census out;
    for (const auto& ks : degrees_within(x.arity(), k_max))
        out[ks] = nondegenerate_elements(x, ks).size();
    return out;
}

// ---------------------------------------------------------------------------
// Verification

/// Functor laws within (K, T): identities, composition in each coordinate
/// over every composable pair, and commutation of actions in distinct
/// coordinates. With `joint`, every two-coordinate joint action is also
/// compared with the corresponding composite.
inline Report verify_functor(const MultiSimplicialGammaSet& x, int k_max, int t_max,
                             bool joint = true)
{
    MultiTruncation tr(x.arity(), k_max, t_max);
    Report r{"functor laws of " + x.name(), tr.scope(), {}};
    const TruncatedDiagram d = tr.evaluate(x);
    if (auto bad = check_diagram(tr.shape(), d)) {
        r.fail(*bad);
        return r;
    }
    for (const auto& ks : tr.degrees())
        if (x.size(ks, 0) != 1)
            r.fail("value at " + degree_string(ks, 0) + " is not a point");

    // (source level, coordinate, morphism) -> arrow, and arrows out of (level, coordinate)
    std::map<std::tuple<std::size_t, int, std::size_t>, std::size_t> lookup;
    std::vector<std::vector<std::vector<std::size_t>>> out(
        tr.shape().level_names.size(), std::vector<std::vector<std::size_t>>(x.arity() + 1));
    for (std::size_t i = 0; i < tr.specs().size(); ++i) {
        const auto& s = tr.specs()[i];
        lookup[{tr.shape().arrows[i].source, s.coordinate, s.morphism}] = i;
        out[tr.shape().arrows[i].source][s.coordinate].push_back(i);
    }
    std::map<DeltaMap, std::size_t> delta_index;
    for (std::size_t i = 0; i < tr.delta_maps().size(); ++i)
        delta_index[tr.delta_maps()[i]] = i;
    std::map<PointedMap, std::size_t> gamma_index;
    for (std::size_t i = 0; i < tr.gamma_maps().size(); ++i)
        gamma_index[tr.gamma_maps()[i]] = i;
    auto limit = [&r] { return r.violations.size() > 8; };
    auto where = [&](std::size_t arrow) {
        return tr.shape().arrows[arrow].label + " at " +
               tr.shape().level_names[tr.shape().arrows[arrow].source];
    };

    for (std::size_t i = 0; i < tr.specs().size(); ++i) {
        const auto& s = tr.specs()[i];
        const bool is_id = s.coordinate < x.arity() ? tr.delta_maps()[s.morphism].is_identity()
                                                    : tr.gamma_maps()[s.morphism].is_identity();
        if (is_id && d.maps[i] != identity_function(d.sizes[tr.shape().arrows[i].source]))
            r.fail("identity not preserved: " + where(i));
    }

    // Composition within one coordinate: act by u, then by v.
    for (std::size_t i = 0; i < tr.specs().size() && !limit(); ++i) {
        const auto& s = tr.specs()[i];
        const std::size_t src = tr.shape().arrows[i].source;
        for (std::size_t j : out[tr.shape().arrows[i].target][s.coordinate]) {
            const auto& t = tr.specs()[j];
            std::size_t composite;
            if (s.coordinate < x.arity()) {
                // contravariant: acting by u then v is acting by u after v
                const DeltaMap uv =
                    compose(tr.delta_maps()[s.morphism], tr.delta_maps()[t.morphism]);
                composite = lookup.at({src, s.coordinate, delta_index.at(uv)});
            } else {
                const PointedMap vu =
                    compose(tr.gamma_maps()[t.morphism], tr.gamma_maps()[s.morphism]);
                composite = lookup.at({src, s.coordinate, gamma_index.at(vu)});
            }
            if (d.maps[composite] != compose(d.maps[j], d.maps[i])) {
                r.fail("composition fails for " + where(i) + " then " + tr.shape().arrows[j].label);
                if (limit())
                    break;
            }
        }
    }

    // Distinct coordinates commute, and the joint action equals the composite.
    for (std::size_t i = 0; i < tr.specs().size() && !limit(); ++i) {
        const auto& s = tr.specs()[i];
        const std::size_t src = tr.shape().arrows[i].source;
        const std::size_t mid = tr.shape().arrows[i].target;
        for (int c = s.coordinate + 1; c <= x.arity() && !limit(); ++c) {
            for (std::size_t j : out[mid][c]) {
                const auto& t = tr.specs()[j];
                const std::size_t first = lookup.at({src, c, t.morphism});
                const std::size_t second =
                    lookup.at({tr.shape().arrows[first].target, s.coordinate, s.morphism});
                const FinFunction one = compose(d.maps[j], d.maps[i]);
                if (one != compose(d.maps[second], d.maps[first])) {
                    r.fail("actions do not commute: " + where(i) + " and " +
                           tr.shape().arrows[j].label);
                    if (limit())
                        break;
                    continue;
                }
                if (!joint)
                    continue;
                auto [alphas, f] = tr.operators(s);
                if (c < x.arity())
                    alphas[c] = tr.delta_maps()[t.morphism];
                else
                    f = tr.gamma_maps()[t.morphism];
                if (x.act(alphas, f) != one) {
                    r.fail("joint action differs from the composite: " + where(i) + " and " +
                           tr.shape().arrows[j].label);
                    if (limit())
                        break;
                }
            }
        }
    }
    return r;
}

/// Naturality of eta : X => Y within (K, T), plus levelwise injectivity if
/// asked. Y is only evaluated on the image of eta, so it may be large.
inline Report verify_transformation(const MultiTransformation& eta,
                                    const MultiSimplicialGammaSet& x,
                                    const MultiSimplicialGammaSet& y, int k_max, int t_max,
                                    bool require_injective)
{
    MultiTruncation tr(x.arity(), k_max, t_max);
    Report r{"transformation " + x.name() + " => " + y.name(), tr.scope(), {}};
    std::vector<FinFunction> comp(tr.shape().level_names.size());
    for (const auto& ks : tr.degrees())
        for (int m = 0; m <= t_max; ++m) {
            auto& c = comp[tr.level(ks, m)];
            c = eta.component(ks, m);
            const std::string at = degree_string(ks, m);
            if (c.size() != x.size(ks, m)) {
                r.fail("component at " + at + " has the wrong domain");
                return r;
            }
            if (c[0] != basepoint)
                r.fail("component at " + at + " is not pointed");
            const std::size_t target = y.size(ks, m);
            for (Element v : c)
                if (v >= target) {
                    r.fail("component at " + at + " leaves the codomain");
                    return r;
                }
            if (require_injective) {
                auto sorted = c;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    r.fail("component at " + at + " is not injective");
            }
        }
    const auto& arrows = tr.shape().arrows;
    for (std::size_t a = 0; a < arrows.size() && r.violations.size() <= 8; ++a) {
        auto [alphas, f] = tr.operators(tr.specs()[a]);
        const FinFunction xa = x.act(alphas, f);
        const auto& src = comp[arrows[a].source];
        const auto& tgt = comp[arrows[a].target];
        for (std::size_t e = 0; e < xa.size(); ++e)
            if (tgt[xa[e]] != y.act_at(alphas, f, src[e])) {
                r.fail("naturality fails along " + arrows[a].label + " from " +
                       tr.shape().level_names[arrows[a].source] + " at element " +
                       std::to_string(e));
                break;
            }
    }
    return r;
}

struct IotaCertificate {
    MultiTransformation transformation;
    Report report;
};

/// iota_n : B^n F1 => K(Z/2, n), B^n applied to the axes inclusion, with its
/// injectivity and naturality checked within (K, T).
inline IotaCertificate iota(int n, int k_max, int t_max)
{
    MultiTransformation eta = lift(axes_inclusion());
    for (int i = 0; i < n; ++i)
        eta = deloop(eta);
    Report r = verify_transformation(eta, delooped_f1(n),
                                     em_deloop(FiniteAbelianGroup::cyclic(2), n, "HZ/2"), k_max,
                                     t_max, true);
    r.name = "iota_" + std::to_string(n) + " is a monomorphism";
    return {std::move(eta), std::move(r)};
}

/// The comparison from the k-fold wedge of X(-, <1>) to X(-, <k>) at ks,
/// induced by the k summand inclusions <1> -> <k>.
inline FinFunction wedge_comparison(const MultiSimplicialGammaSet& x, const std::vector<int>& ks,
                                    int k)
{
    const std::size_t cells = x.size(ks, 1) - 1;
    FinFunction out(1 + static_cast<std::size_t>(k) * cells, basepoint);
    for (int j = 1; j <= k; ++j) {
        std::vector<int> a{j};
        const FinFunction inc = x.act_gamma(ks, PointedMap(1, k, a));
        for (std::size_t e = 1; e <= cells; ++e)
            out[(j - 1) * cells + e] = inc[e];
    }
    return out;
}

/// Transports B^n F1(d_i^k) along the wedge comparison at every multidegree
/// within K and checks it is the fold action: outer summands are projected
/// away for i = 0, k and summands i, i+1 are folded for 0 < i < k.
inline Report verify_face_action(int n, int k, int k_max)
{
    Report r{"face action on B^" + std::to_string(n) + "F1<" + std::to_string(k) + ">",
             "K=" + std::to_string(k_max), {}};
    if (k < 1) {
        r.fail("k must be positive");
        return r;
    }
    const auto x = delooped_f1(n);
    const auto folded = fold_construction(at_gamma_level(x, 1));
    for (const auto& ks : degrees_within(n, k_max)) {
        const FinFunction psi = wedge_comparison(x, ks, k);
        const FinFunction psi_lower = wedge_comparison(x, ks, k - 1);
        if (!is_bijective(psi, x.size(ks, k)) || !is_bijective(psi_lower, x.size(ks, k - 1))) {
            r.fail("wedge comparison is not bijective at " + degree_string(ks));
            continue;
        }
        FinFunction psi_lower_inv(psi_lower.size());
        for (std::size_t e = 0; e < psi_lower.size(); ++e)
            psi_lower_inv[psi_lower[e]] = static_cast<Element>(e);
        for (int i = 0; i <= k; ++i) {
            const PointedMap face = gamma_face(i, k);
            const FinFunction transported =
                compose(psi_lower_inv, compose(x.act_gamma(ks, face), psi));
            if (transported != folded.act_gamma(ks, face))
                r.fail("d_" + std::to_string(i) + " is not the expected " +
                       (i == 0 || i == k ? "projection" : "fold") + " at " + degree_string(ks));
        }
    }
    return r;
}

/// Evaluating at [1] in the last coordinate undoes one delooping, levelwise.
inline Report verify_right_inverse(const MultiSimplicialGammaSet& x, int k_max, int t_max)
{
    const auto back = evaluate_at_one(deloop(x));
    MultiTruncation tr(x.arity(), k_max, t_max);
    Report r{"evaluation at [1] inverts B on " + x.name(), tr.scope(), {}};
    const TruncatedDiagram a = tr.evaluate(x), b = tr.evaluate(back);
    for (std::size_t l = 0; l < a.sizes.size(); ++l)
        if (a.sizes[l] != b.sizes[l])
            r.fail("size differs at " + tr.shape().level_names[l]);
    for (std::size_t i = 0; i < a.maps.size() && r.passed(); ++i)
        if (a.maps[i] != b.maps[i])
            r.fail("action differs for " + tr.shape().arrows[i].label + " at " +
                   tr.shape().level_names[tr.shape().arrows[i].source]);
    return r;
}

/// |B^n F1 (ks, <m>)| = k_1 ... k_n m + 1 at every level within (K, T).
inline Report verify_closed_form(int n, int k_max, int t_max)
{
    Report r{"closed form of B^" + std::to_string(n) + "F1",
             "K=" + std::to_string(k_max) + ", T=" + std::to_string(t_max), {}};
    const auto x = delooped_f1(n);
    for (const auto& ks : degrees_within(n, k_max))
        for (int m = 0; m <= t_max; ++m) {
            const std::size_t expected =
                static_cast<std::size_t>(std::accumulate(ks.begin(), ks.end(), m,
                                                         std::multiplies<>())) +
                1;
            if (x.size(ks, m) != expected)
                r.fail("size at " + degree_string(ks, m) + " is " + std::to_string(x.size(ks, m)));
        }
    return r;
}

}  // namespace fone
