#pragma once

// Skeletal finite pointed sets <n> = {*, 1, ..., n}, the simplex category,
// and the circle functor s : Delta^op -> Fin_*.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fone {

/// Element of a finite pointed set; 0 is always the basepoint.
using Element = std::uint32_t;
inline constexpr Element basepoint = 0;

/// A total function between finite pointed sets, stored densely
/// (entry e is the image of element e). Sizes include the basepoint.
using FinFunction = std::vector<Element>;

class composition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PointedSet {
    int size = 0;  // <size> has size + 1 elements

    friend bool operator==(PointedSet, PointedSet) = default;
};

/// Basepoint-preserving map <m> -> <n>. Entry i-1 holds the image of i,
/// with 0 standing for the basepoint.
class PointedMap {
public:
    PointedMap() = default;

    PointedMap(int domain, int codomain, std::vector<int> assignment)
        : domain_(domain), codomain_(codomain), assignment_(std::move(assignment))
    {
        if (domain < 0 || codomain < 0)
            throw std::invalid_argument("PointedMap: negative size");
        if (static_cast<int>(assignment_.size()) != domain)
            throw std::invalid_argument("PointedMap: assignment length differs from domain");
        for (int v : assignment_)
            if (v < 0 || v > codomain)
                throw std::invalid_argument("PointedMap: value outside codomain");
    }

    static PointedMap identity(int n)
    {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i)
            a[i] = i + 1;
        return {n, n, std::move(a)};
    }

    static PointedMap zero(int m, int n) { return {m, n, std::vector<int>(m, 0)}; }

    int domain() const { return domain_; }
    int codomain() const { return codomain_; }
    const std::vector<int>& assignment() const { return assignment_; }

    /// Image of i in {0 (basepoint), 1, ..., domain}.
    int operator()(int i) const { return i == 0 ? 0 : assignment_[i - 1]; }

    bool is_identity() const { return *this == identity(domain_); }

    friend bool operator==(const PointedMap&, const PointedMap&) = default;
    friend auto operator<=>(const PointedMap&, const PointedMap&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PointedMap& f)
    {
        os << '<' << f.domain_ << ">-><" << f.codomain_ << ">{";
        for (int i = 0; i < f.domain_; ++i) {
            if (i)
                os << ',';
            os << (i + 1) << ':';
            if (f.assignment_[i] == 0)
                os << '*';
            else
                os << f.assignment_[i];
        }
        return os << '}';
    }

private:
    int domain_ = 0;
    int codomain_ = 0;
    std::vector<int> assignment_;
};

template <class T>
std::string to_string(const T& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

/// g after f.
inline PointedMap compose(const PointedMap& g, const PointedMap& f)
{
    if (f.codomain() != g.domain())
        throw composition_error("compose: codomain " + std::to_string(f.codomain()) +
                                " does not match domain " + std::to_string(g.domain()));
    std::vector<int> a(f.domain());
    for (int i = 1; i <= f.domain(); ++i)
        a[i - 1] = g(f(i));
    return {f.domain(), g.codomain(), std::move(a)};
}

/// All (n+1)^m pointed maps <m> -> <n>, lexicographic in the assignment.
/// The zero map comes first.
inline std::vector<PointedMap> enumerate_ptd_maps(int m, int n)
{
    std::vector<PointedMap> out;
    std::vector<int> a(m, 0);
    while (true) {
        out.emplace_back(m, n, a);
        int pos = m - 1;
        while (pos >= 0 && a[pos] == n) {
            a[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++a[pos];
    }
    return out;
}

/// Code of the pair (i, j) in <a> ^ <c> = <ac>; 0 if either is the basepoint.
inline int smash_code(int i, int j, int c) { return (i == 0 || j == 0) ? 0 : (i - 1) * c + j; }

inline PointedMap smash(const PointedMap& f, const PointedMap& g)
{
    const int a = f.domain(), c = g.domain(), d = g.codomain();
    std::vector<int> out(static_cast<std::size_t>(a) * c);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= c; ++j)
            out[smash_code(i, j, c) - 1] = smash_code(f(i), g(j), d);
    return {a * c, f.codomain() * d, std::move(out)};
}

inline PointedMap wedge(const PointedMap& f, const PointedMap& g)
{
    const int a = f.domain(), c = g.domain(), b = f.codomain();
    std::vector<int> out;
    out.reserve(a + c);
    for (int i = 1; i <= a; ++i)
        out.push_back(f(i));
    for (int j = 1; j <= c; ++j)
        out.push_back(g(j) == 0 ? 0 : g(j) + b);
    return {a + c, b + g.codomain(), std::move(out)};
}

/// Image of the i-th face under Delta^op -> Fin_*: <k> -> <k-1>.
inline PointedMap gamma_face(int i, int k)
{
    if (k < 1 || i < 0 || i > k)
        throw std::out_of_range("gamma_face: index " + std::to_string(i) + " out of range for <" +
                                std::to_string(k) + ">");
    std::vector<int> a(k);
    for (int j = 1; j <= k; ++j) {
        if (j <= i)
            a[j - 1] = j;
        else
            a[j - 1] = j - 1;
    }
    if (i == 0)
        a[0] = 0;
    if (i == k)
        a[k - 1] = 0;
    return {k, k - 1, std::move(a)};
}

/// Monotone map [a] -> [b].
class DeltaMap {
public:
    DeltaMap() = default;

    DeltaMap(int domain, int codomain, std::vector<int> values)
        : domain_(domain), codomain_(codomain), values_(std::move(values))
    {
        if (domain < 0 || codomain < 0)
            throw std::invalid_argument("DeltaMap: negative dimension");
        if (static_cast<int>(values_.size()) != domain + 1)
            throw std::invalid_argument("DeltaMap: expected domain + 1 values");
        for (std::size_t t = 0; t < values_.size(); ++t) {
            if (values_[t] < 0 || values_[t] > codomain)
                throw std::invalid_argument("DeltaMap: value outside codomain");
            if (t > 0 && values_[t] < values_[t - 1])
                throw std::invalid_argument("DeltaMap: not monotone");
        }
    }

    static DeltaMap identity(int n)
    {
        std::vector<int> v(n + 1);
        for (int t = 0; t <= n; ++t)
            v[t] = t;
        return {n, n, std::move(v)};
    }

    /// Coface delta_i : [n-1] -> [n], skipping i.
    static DeltaMap coface(int i, int n)
    {
        if (n < 1 || i < 0 || i > n)
            throw std::out_of_range("coface index out of range");
        std::vector<int> v(n);
        for (int t = 0; t < n; ++t)
            v[t] = t < i ? t : t + 1;
        return {n - 1, n, std::move(v)};
    }

    /// Codegeneracy sigma_j : [n+1] -> [n], repeating j.
    static DeltaMap codegeneracy(int j, int n)
    {
        if (n < 0 || j < 0 || j > n)
            throw std::out_of_range("codegeneracy index out of range");
        std::vector<int> v(n + 2);
        for (int t = 0; t <= n + 1; ++t)
            v[t] = t <= j ? t : t - 1;
        return {n + 1, n, std::move(v)};
    }

    int domain() const { return domain_; }
    int codomain() const { return codomain_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int t) const { return values_[t]; }
    bool is_identity() const { return *this == identity(domain_); }

    friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
    friend auto operator<=>(const DeltaMap&, const DeltaMap&) = default;

    friend std::ostream& operator<<(std::ostream& os, const DeltaMap& a)
    {
        os << '[' << a.domain_ << "]->[" << a.codomain_ << "](";
        for (std::size_t t = 0; t < a.values_.size(); ++t)
            os << (t ? "," : "") << a.values_[t];
        return os << ')';
    }

private:
    int domain_ = 0;
    int codomain_ = 0;
    std::vector<int> values_;
};

/// g after f, both monotone.
inline DeltaMap compose(const DeltaMap& g, const DeltaMap& f)
{
    if (f.codomain() != g.domain())
        throw composition_error("compose: codomain [" + std::to_string(f.codomain()) +
                                "] does not match domain [" + std::to_string(g.domain()) + "]");
    std::vector<int> v(f.domain() + 1);
    for (int t = 0; t <= f.domain(); ++t)
        v[t] = g(f(t));
    return {f.domain(), g.codomain(), std::move(v)};
}

/// All monotone maps [a] -> [b], lexicographic in the values.
inline std::vector<DeltaMap> enumerate_delta_maps(int a, int b)
{
    std::vector<DeltaMap> out;
    std::vector<int> v(a + 1, 0);
    while (true) {
        out.emplace_back(a, b, v);
        int pos = a;
        while (pos >= 0 && v[pos] == b)
            --pos;
        if (pos < 0)
            break;
        ++v[pos];
        for (int t = pos + 1; t <= a; ++t)
            v[t] = v[pos];
    }
    return out;
}

/// s[m] = <m>; element i is the monotone map [m] -> [1] jumping to 1 at i.
inline PointedSet s_on_object(int m)
{
    if (m < 0)
        throw std::invalid_argument("s_on_object: negative level");
    return {m};
}

/// s(alpha) : <b> -> <a> for alpha : [a] -> [b].
inline PointedMap s_on_map(const DeltaMap& alpha)
{
    const int a = alpha.domain(), b = alpha.codomain();
    std::vector<int> out(b, 0);
    for (int i = 1; i <= b; ++i) {
        if (alpha(0) < i && i <= alpha(a)) {
            int t = 1;
            while (alpha(t) < i)
                ++t;
            out[i - 1] = t;
        }
    }
    return {b, a, std::move(out)};
}

/// Dense form of a pointed map, as a FinFunction on {0, ..., domain}.
inline FinFunction to_fin_function(const PointedMap& f)
{
    FinFunction out(f.domain() + 1);
    for (int i = 0; i <= f.domain(); ++i)
        out[i] = static_cast<Element>(f(i));
    return out;
}

inline FinFunction compose(const FinFunction& g, const FinFunction& f)
{
    FinFunction out(f.size());
    for (std::size_t e = 0; e < f.size(); ++e)
        out[e] = g.at(f[e]);
    return out;
}

inline FinFunction identity_function(std::size_t n)
{
    FinFunction out(n);
    for (std::size_t e = 0; e < n; ++e)
        out[e] = static_cast<Element>(e);
    return out;
}

inline bool is_injective(const FinFunction& f, std::size_t codomain_size)
{
    std::vector<char> seen(codomain_size, 0);
    for (Element v : f) {
        if (v >= codomain_size || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

inline bool is_bijective(const FinFunction& f, std::size_t codomain_size)
{
    return f.size() == codomain_size && is_injective(f, codomain_size);
}

}  // namespace fone
