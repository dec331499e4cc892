#pragma once

// Gamma-sets: pointed functors Fin_* -> Set_*, represented by their level
// sizes and their action on pointed maps.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "abelian_group.hpp"
#include "diagram.hpp"
#include "finset.hpp"
#include "memo.hpp"
#include "report.hpp"

namespace fone {

class GammaSet {
public:
    using SizeFn = std::function<std::size_t(int)>;
    using ActionFn = std::function<FinFunction(const PointedMap&)>;
    using LabelFn = std::function<std::string(int, Element)>;
    using PointFn = std::function<Element(const PointedMap&, Element)>;

    GammaSet(std::string name, SizeFn size, ActionFn action, LabelFn label = {}, PointFn point = {})
        : impl_(std::make_shared<const Impl>(std::move(name), std::move(size), std::move(action),
                                             std::move(label), std::move(point)))
    {
    }

    const std::string& name() const { return impl_->name; }

    /// Number of elements of X<m>, basepoint included.
    std::size_t size(int m) const
    {
        return impl_->sizes.get(m, [this](const int& k) { return impl_->size(k); });
    }

    /// X(f) : X<f.domain()> -> X<f.codomain()>.
    FinFunction act(const PointedMap& f) const { return impl_->action(f); }

    /// X(f)(e) without building the whole table when a pointwise rule exists.
    Element act_at(const PointedMap& f, Element e) const
    {
        if (impl_->point)
            return impl_->point(f, e);
        return impl_->action(f).at(e);
    }
    bool has_pointwise_action() const { return static_cast<bool>(impl_->point); }

    std::string label(int m, Element e) const
    {
        if (impl_->label)
            return impl_->label(m, e);
        return e == basepoint ? "*" : std::to_string(e);
    }

private:
    struct Impl {
        Impl(std::string n, SizeFn s, ActionFn a, LabelFn l, PointFn p)
            : name(std::move(n)), size(std::move(s)), action(std::move(a)), label(std::move(l)),
              point(std::move(p))
        {
        }

        std::string name;
        SizeFn size;
        ActionFn action;
        LabelFn label;
        PointFn point;
        detail::Memo<int, std::size_t> sizes;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Position of f in enumerate_ptd_maps(f.domain(), f.codomain()).
inline std::size_t ptd_map_rank(const PointedMap& f)
{
    std::size_t r = 0;
    for (int v : f.assignment())
        r = r * static_cast<std::size_t>(f.codomain() + 1) + static_cast<std::size_t>(v);
    return r;
}

/// base^exp as a level size; throws std::overflow_error past the Element range.
inline std::size_t int_pow(std::size_t base, int exp)
{
    constexpr std::size_t limit = std::size_t{std::numeric_limits<Element>::max()} + 1;
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base)
            throw std::overflow_error("level size " + std::to_string(base) + "^" +
                                      std::to_string(exp) + " exceeds the element range");
        r *= base;
    }
    return r;
}

/// The inclusion Fin_* -> Set_*.
inline GammaSet f1()
{
    return GammaSet(
        "F1", [](int m) { return static_cast<std::size_t>(m) + 1; },
        [](const PointedMap& f) { return to_fin_function(f); });
}

/// Gamma(n) = Fin_*(<n>, -). Element index = ptd_map_rank of the map.
inline GammaSet corepresentable(int n)
{
    return GammaSet(
        "Gamma(" + std::to_string(n) + ")",
        [n](int m) { return int_pow(static_cast<std::size_t>(m) + 1, n); },
        [n](const PointedMap& f) {
            FinFunction out;
            out.reserve(int_pow(static_cast<std::size_t>(f.domain()) + 1, n));
            for (const auto& g : enumerate_ptd_maps(n, f.domain()))
                out.push_back(static_cast<Element>(ptd_map_rank(compose(f, g))));
            return out;
        },
        [n](int m, Element e) { return to_string(enumerate_ptd_maps(n, m).at(e)); });
}

/// Levelwise product; (x, y) has index x * |Y<m>| + y.
inline GammaSet gamma_product(const GammaSet& x, const GammaSet& y)
{
    return GammaSet(
        x.name() + "x" + y.name(), [x, y](int m) { return x.size(m) * y.size(m); },
        [x, y](const PointedMap& f) {
            const FinFunction fx = x.act(f), fy = y.act(f);
            const std::size_t ys = fy.size(), yt = y.size(f.codomain());
            FinFunction out(fx.size() * ys);
            for (std::size_t a = 0; a < fx.size(); ++a)
                for (std::size_t b = 0; b < ys; ++b)
                    out[a * ys + b] = static_cast<Element>(fx[a] * yt + fy[b]);
            return out;
        },
        [x, y](int m, Element e) {
            const auto ys = y.size(m);
            return "(" + x.label(m, static_cast<Element>(e / ys)) + "," +
                   y.label(m, static_cast<Element>(e % ys)) + ")";
        });
}

/// n-fold product of F1 with itself (Gamma(0) for n = 0).
inline GammaSet f1_power(int n)
{
    if (n == 0)
        return corepresentable(0);
    GammaSet out = f1();
    for (int i = 1; i < n; ++i)
        out = gamma_product(out, f1());
    return out;
}

namespace detail {

// Digits of A^d tuples: the group zero is digit 0, so the zero tuple is element 0.
struct GroupDigits {
    std::vector<int> to_digit;
    std::vector<int> to_elem;

    explicit GroupDigits(const FiniteAbelianGroup& a) : to_digit(a.order()), to_elem(a.order())
    {
        int next = 1;
        for (int g = 0; g < a.order(); ++g) {
            int d = g == a.zero() ? 0 : next++;
            to_digit[g] = d;
            to_elem[d] = g;
        }
    }
};

}  // namespace detail

/// HA: <d> |-> A^d, pushing tuples forward by summing over fibres.
/// Tuples are read as base-|A| numerals, first entry most significant.
inline GammaSet eilenberg_maclane(const FiniteAbelianGroup& a, std::string name = "HA")
{
    auto digits = std::make_shared<detail::GroupDigits>(a);
    const std::size_t q = static_cast<std::size_t>(a.order());
    auto decode = [digits, q](int m, std::size_t code) {
        std::vector<int> tuple(m);
        for (int i = m - 1; i >= 0; --i) {
            tuple[i] = digits->to_elem[code % q];
            code /= q;
        }
        return tuple;
    };
    auto push = [a, digits, q, decode](const PointedMap& f, Element e) {
        const auto tuple = decode(f.domain(), e);
        std::vector<int> sums(f.codomain(), a.zero());
        for (int i = 1; i <= f.domain(); ++i)
            if (f(i) != 0)
                sums[f(i) - 1] = a.add(sums[f(i) - 1], tuple[i - 1]);
        std::size_t img = 0;
        for (int s : sums)
            img = img * q + static_cast<std::size_t>(digits->to_digit[s]);
        return static_cast<Element>(img);
    };
    return GammaSet(
        std::move(name), [q](int m) { return int_pow(q, m); },
        [q, push](const PointedMap& f) {
            FinFunction out(int_pow(q, f.domain()));
            for (std::size_t code = 0; code < out.size(); ++code)
                out[code] = push(f, static_cast<Element>(code));
            return out;
        },
        [decode](int m, Element e) {
            const auto tuple = decode(m, e);
            std::string s = "(";
            for (int i = 0; i < m; ++i)
                s += (i ? "," : "") + std::to_string(tuple[i]);
            return s + ")";
        },
        push);
}

/// A map X => Y given by its component at each level <m>.
struct GammaTransformation {
    std::function<FinFunction(int)> component;
};

/// The axes F1 => HZ/2: i |-> i-th standard basis tuple, * |-> 0.
inline GammaTransformation axes_inclusion()
{
    return {[](int d) {
        if (d >= std::numeric_limits<Element>::digits)
            throw std::overflow_error("axes at <" + std::to_string(d) +
                                      "> exceed the element range");
        FinFunction out(static_cast<std::size_t>(d) + 1, 0);
        for (int i = 1; i <= d; ++i)
            out[i] = static_cast<Element>(std::size_t{1} << (d - i));
        return out;
    }};
}

/// Levels <0>..<T> with every pointed map between them.
inline DiagramShape gamma_shape(int t)
{
    DiagramShape s;
    for (int m = 0; m <= t; ++m)
        s.level_names.push_back("<" + std::to_string(m) + ">");
    for (int m = 0; m <= t; ++m)
        for (int n = 0; n <= t; ++n)
            for (const auto& f : enumerate_ptd_maps(m, n))
                s.arrows.push_back({static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                                    to_string(f)});
    return s;
}

inline TruncatedDiagram evaluate(const GammaSet& x, int t)
{
    TruncatedDiagram d;
    for (int m = 0; m <= t; ++m)
        d.sizes.push_back(x.size(m));
    for (int m = 0; m <= t; ++m)
        for (int n = 0; n <= t; ++n)
            for (const auto& f : enumerate_ptd_maps(m, n))
                d.maps.push_back(x.act(f));
    return d;
}

/// Exhaustive functor-law check over all pointed maps between <a>, <b>, a, b <= T.
inline Report verify_functor(const GammaSet& x, int t)
{
    Report r{"functor laws of " + x.name(), "T=" + std::to_string(t), {}};
    if (x.size(0) != 1)
        r.fail("value at <0> has " + std::to_string(x.size(0)) + " elements");
    // actions[a][b][rank]
    std::vector<std::vector<std::vector<FinFunction>>> actions(t + 1);
    for (int a = 0; a <= t; ++a) {
        actions[a].resize(t + 1);
        for (int b = 0; b <= t; ++b) {
            for (const auto& f : enumerate_ptd_maps(a, b)) {
                FinFunction xf = x.act(f);
                if (xf.size() != x.size(a))
                    r.fail(to_string(f) + ": action has domain size " + std::to_string(xf.size()));
                else if (xf[0] != basepoint)
                    r.fail(to_string(f) + ": basepoint not preserved");
                for (Element v : xf)
                    if (v >= x.size(b)) {
                        r.fail(to_string(f) + ": action leaves X<" + std::to_string(b) + ">");
                        break;
                    }
                if (a == b && f.is_identity() && xf != identity_function(x.size(a)))
                    r.fail("identity of <" + std::to_string(a) + "> not sent to the identity");
                actions[a][b].push_back(std::move(xf));
            }
        }
    }
    if (!r.passed())
        return r;
    for (int a = 0; a <= t; ++a)
        for (int b = 0; b <= t; ++b) {
            const auto fs = enumerate_ptd_maps(a, b);
            for (int c = 0; c <= t; ++c) {
                const auto gs = enumerate_ptd_maps(b, c);
                for (std::size_t i = 0; i < fs.size(); ++i)
                    for (std::size_t j = 0; j < gs.size(); ++j) {
                        const auto gf = compose(gs[j], fs[i]);
                        if (actions[a][c][ptd_map_rank(gf)] !=
                            compose(actions[b][c][j], actions[a][b][i])) {
                            r.fail("composition fails for g=" + to_string(gs[j]) +
                                   " after f=" + to_string(fs[i]));
                            if (r.violations.size() > 8)
                                return r;
                        }
                    }
            }
        }
    return r;
}

/// Naturality (and optionally levelwise injectivity) of eta : X => Y up to T.
inline Report verify_transformation(const GammaTransformation& eta, const GammaSet& x,
                                    const GammaSet& y, int t, bool require_injective)
{
    Report r{"transformation " + x.name() + " => " + y.name(), "T=" + std::to_string(t), {}};
    std::vector<FinFunction> comp;
    for (int m = 0; m <= t; ++m) {
        comp.push_back(eta.component(m));
        if (comp[m].size() != x.size(m)) {
            r.fail("component at <" + std::to_string(m) + "> has the wrong domain");
            return r;
        }
        if (comp[m][0] != basepoint)
            r.fail("component at <" + std::to_string(m) + "> is not pointed");
        if (require_injective && !is_injective(comp[m], y.size(m)))
            r.fail("component at <" + std::to_string(m) + "> is not injective");
    }
    for (int m = 0; m <= t; ++m)
        for (int n = 0; n <= t; ++n)
            for (const auto& f : enumerate_ptd_maps(m, n))
                if (compose(comp[n], x.act(f)) != compose(y.act(f), comp[m]))
                    r.fail("naturality square fails for " + to_string(f));
    return r;
}

inline IsoResult gamma_iso_on_truncation(const GammaSet& x, const GammaSet& y, int t)
{
    return find_isomorphism(gamma_shape(t), evaluate(x, t), evaluate(y, t));
}

/// The Segal map X<d> -> X<1>^d from the d projections <d> -> <1>;
/// tuples encoded base |X<1>|, first coordinate most significant.
inline FinFunction segal_map(const GammaSet& x, int d)
{
    const std::size_t q = x.size(1);
    FinFunction out(x.size(d), 0);
    for (int i = 1; i <= d; ++i) {
        std::vector<int> proj(d, 0);
        proj[i - 1] = 1;
        const FinFunction p = x.act(PointedMap(d, 1, proj));
        for (std::size_t e = 0; e < out.size(); ++e)
            out[e] = static_cast<Element>(out[e] * q + p[e]);
    }
    return out;
}

struct SegalCheck {
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
};

inline SegalCheck segal_condition(const GammaSet& x, int d)
{
    const FinFunction s = segal_map(x, d);
    const std::size_t target = int_pow(x.size(1), d);
    SegalCheck c;
    c.injective = is_injective(s, target);
    c.surjective = c.injective && s.size() == target;
    if (!c.injective) {
        std::vector<char> hit(target, 0);
        for (Element v : s)
            hit[v] = 1;
        c.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    }
    return c;
}

}  // namespace fone
