#pragma once

// Reduced integral homology of simplicial pointed sets, through normalized
// chains on non-degenerate, non-basepoint simplices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "finset.hpp"
#include "memo.hpp"
#include "multisimplicial.hpp"
#include "smith.hpp"

namespace fone {

class simplicial_identity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Functor Delta^op -> Set_*.
class SimplicialPointedSet {
public:
    using SizeFn = std::function<std::size_t(int)>;
    using ActionFn = std::function<FinFunction(const DeltaMap&)>;

    SimplicialPointedSet(std::string name, SizeFn size, ActionFn action)
        : impl_(std::make_shared<const Impl>(std::move(name), std::move(size), std::move(action)))
    {
    }

    const std::string& name() const { return impl_->name; }
    std::size_t size(int m) const
    {
        return impl_->sizes.get(m, [this](const int& k) { return impl_->size(k); });
    }
    /// S(alpha) : S_b -> S_a for alpha : [a] -> [b].
    FinFunction act(const DeltaMap& alpha) const { return impl_->action(alpha); }

private:
    struct Impl {
        Impl(std::string n, SizeFn s, ActionFn a)
            : name(std::move(n)), size(std::move(s)), action(std::move(a))
        {
        }

        std::string name;
        SizeFn size;
        ActionFn action;
        detail::Memo<int, std::size_t> sizes;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Level m is X at [m, ..., m]; alpha acts in every coordinate at once.
inline SimplicialPointedSet diagonal(const MultiSimplicialPointedSet& x)
{
    const int n = x.arity();
    return SimplicialPointedSet(
        "diag(" + x.name() + ")",
        [x, n](int m) { return x.size(std::vector<int>(n, m)); },
        [x, n](const DeltaMap& alpha) { return x.act(std::vector<DeltaMap>(n, alpha)); });
}

struct ChainComplex {
    /// basis[q]: non-degenerate non-basepoint q-simplices, q = 0..top
    std::vector<std::vector<Element>> basis;
    /// boundary[q]: matrix of d_q : C_q -> C_{q-1} (rows index C_{q-1}); boundary[0] has no rows
    std::vector<IntMatrix> boundary;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    std::size_t rank(int q) const { return basis.at(q).size(); }
};

/// Functoriality on every composable pair of cofaces and codegeneracies
/// between levels 0..N, and pointedness of every generator.
inline void check_simplicial_identities(const SimplicialPointedSet& s, int levels)
{
    std::vector<DeltaMap> gens;
    for (int q = 1; q <= levels; ++q)
        for (int i = 0; i <= q; ++i)
            gens.push_back(DeltaMap::coface(i, q));
    for (int q = 0; q < levels; ++q)
        for (int j = 0; j <= q; ++j)
            gens.push_back(DeltaMap::codegeneracy(j, q));
    std::vector<FinFunction> acts;
    for (const auto& g : gens) {
        acts.push_back(s.act(g));
        if (acts.back().size() != s.size(g.codomain()) || acts.back().at(0) != basepoint)
            throw simplicial_identity_error(s.name() + ": " + to_string(g) +
                                            " is not a pointed map of the right shape");
    }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            if (gens[b].codomain() != gens[a].domain())
                continue;
            // S(a . b) = S(b) . S(a)
            if (s.act(compose(gens[a], gens[b])) != compose(acts[b], acts[a]))
                throw simplicial_identity_error(s.name() + ": S(" + to_string(gens[a]) + " . " +
                                                to_string(gens[b]) + ") != S(" +
                                                to_string(gens[b]) + ") S(" + to_string(gens[a]) +
                                                ")");
        }
}

/// Largest level a chain computation will materialize.
inline constexpr std::size_t max_chain_level_size = 20000;

inline ChainComplex normalized_chains(const SimplicialPointedSet& s, int levels)
{
    if (levels < 0)
        throw std::invalid_argument("normalized_chains: negative level bound");
    for (int q = 0; q <= levels; ++q)
        if (s.size(q) > max_chain_level_size)
            throw std::length_error(s.name() + " has " + std::to_string(s.size(q)) +
                                    " simplices in degree " + std::to_string(q) +
                                    "; lower the level bound");
    check_simplicial_identities(s, levels);

    ChainComplex c;
    std::vector<std::vector<std::int64_t>> position(levels + 1);
    for (int q = 0; q <= levels; ++q) {
        std::vector<char> degenerate(s.size(q), 0);
        degenerate[basepoint] = 1;
        for (int j = 0; j < q; ++j)
            for (Element v : s.act(DeltaMap::codegeneracy(j, q - 1)))
                degenerate[v] = 1;
        std::vector<Element> b;
        position[q].assign(s.size(q), -1);
        for (std::size_t e = 0; e < degenerate.size(); ++e)
            if (!degenerate[e]) {
                position[q][e] = static_cast<std::int64_t>(b.size());
                b.push_back(static_cast<Element>(e));
            }
        c.basis.push_back(std::move(b));
    }
    c.boundary.emplace_back(0, c.basis[0].size());
    for (int q = 1; q <= levels; ++q) {
        IntMatrix d(c.basis[q - 1].size(), c.basis[q].size());
        for (int i = 0; i <= q; ++i) {
            const FinFunction face = s.act(DeltaMap::coface(i, q));
            const std::int64_t sign = i % 2 == 0 ? 1 : -1;
            for (std::size_t col = 0; col < c.basis[q].size(); ++col) {
                const std::int64_t row = position[q - 1][face[c.basis[q][col]]];
                if (row >= 0)
                    d(static_cast<std::size_t>(row), col) += sign;
            }
        }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

/// d_q d_{q+1} = 0 for every q in range.
inline bool boundary_squared_zero(const ChainComplex& c)
{
    for (int q = 1; q < c.top(); ++q)
        if (!multiply(c.boundary[q], c.boundary[q + 1]).is_zero())
            return false;
    return true;
}

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<std::int64_t> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        if (betti == 1)
            s = "Z";
        else if (betti > 1)
            s = "Z^" + std::to_string(betti);
        for (auto t : torsion)
            s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
        return s;
    }
};

struct HomologyReport {
    std::string object;
    int levels = 0;  // truncation: simplices computed in degrees 0..levels
    std::vector<HomologyGroup> groups;  // degrees 0..reliable_degree()
    bool reduced = true;

    /// Highest degree whose incoming boundary lies inside the computed range.
    int reliable_degree() const { return levels - 1; }

    const HomologyGroup& operator[](int q) const { return groups.at(q); }

    std::string to_string() const
    {
        std::ostringstream os;
        os << (reduced ? "reduced " : "") << "homology of " << object << " (levels 0.." << levels
           << ", reliable through degree " << reliable_degree() << ")\n";
        for (std::size_t q = 0; q < groups.size(); ++q)
            os << "  H" << (reduced ? "~" : "") << q << " = " << groups[q].to_string() << '\n';
        os << "  H" << (reduced ? "~" : "") << "q for q >= " << levels << ": unknown\n";
        return os.str();
    }
};

/// H_q = ker d_q / im d_{q+1} for q < top, via Smith normal form.
inline HomologyReport homology(const ChainComplex& c, std::string object = "complex")
{
    HomologyReport r;
    r.object = std::move(object);
    r.levels = c.top();
    std::vector<SmithForm> snf;
    for (int q = 0; q <= c.top(); ++q)
        snf.push_back(smith_normal_form(c.boundary[q]));
    for (int q = 0; q < c.top(); ++q) {
        HomologyGroup g;
        const std::size_t kernel = c.rank(q) - snf[q].rank;
        g.betti = kernel - snf[q + 1].rank;
        for (auto d : snf[q + 1].invariants)
            if (d > 1)
                g.torsion.push_back(d);
        r.groups.push_back(std::move(g));
    }
    return r;
}

/// Unreduced homology of a connected pointed object from its reduced homology.
inline HomologyReport unreduced(HomologyReport r)
{
    if (r.reduced && !r.groups.empty())
        ++r.groups[0].betti;
    r.reduced = false;
    return r;
}

/// Alternating sum of chain ranks against alternating Betti numbers. Only
/// meaningful when the top computed degree has no cells.
inline bool euler_characteristic_matches(const ChainComplex& c, const HomologyReport& h)
{
    if (c.top() < 0 || c.rank(c.top()) != 0)
        return false;
    std::int64_t chains = 0, bettis = 0;
    for (int q = 0; q <= c.top(); ++q)
        chains += (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.rank(q));
    for (std::size_t q = 0; q < h.groups.size(); ++q)
        bettis += (q % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.groups[q].betti);
    return chains == bettis;
}

inline HomologyReport reduced_homology(const MultiSimplicialPointedSet& x, int levels)
{
    const auto diag = diagonal(x);
    return homology(normalized_chains(diag, levels), diag.name());
}

}  // namespace fone
