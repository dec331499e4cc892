// One line per acceptance criterion; exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fone/gamma.hpp"
#include "fone/homology.hpp"
#include "fone/multisimplicial.hpp"
#include "fone/plasma.hpp"
#include "oracles.hpp"

using namespace fone;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);

Outcome circle_lemma()
{
    Outcome o;
    const auto b = at_gamma_level(delooped_f1(1), 1);
    for (int m = 0; m <= 6; ++m)
        o.expect(b.size({m}) == static_cast<std::size_t>(m) + 1, "size at [" + std::to_string(m) + "]");
    for (int a = 0; a <= 6; ++a)
        for (int c = 0; c <= 6; ++c)
            for (const auto& alpha : enumerate_delta_maps(a, c)) {
                std::vector<Element> expected{basepoint};
                for (int v : oracle::circle_action(alpha))
                    expected.push_back(static_cast<Element>(v));
                o.expect(b.act(std::vector<DeltaMap>{alpha}) == expected, "action of " + to_string(alpha));
            }
    return o;
}

Outcome wedge_decomposition()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const auto x = delooped_f1(n);
        for (int k = 0; k <= 3; ++k) {
            const auto r = multisimp_iso_on_truncation(at_gamma_level(x, k),
                                                       wedge_power(at_gamma_level(x, 1), k), 3);
            o.expect(static_cast<bool>(r), "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                               ": " + r.witness);
        }
    }
    return o;
}

Outcome structure_census()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const auto x = delooped_f1(n);
        for (const auto& [ks, count] : nondegenerate_census(at_gamma_level(x, 1), 3)) {
            const bool top = std::all_of(ks.begin(), ks.end(), [](int v) { return v == 1; });
            o.expect(count == (top ? 1U : 0U), "n=" + std::to_string(n) + " census at " + degree_string(ks));
            if (top)
                o.expect(x.size(ks, 1) == 2, "two elements at [1,...,1]");
            if (std::find(ks.begin(), ks.end(), 0) != ks.end())
                for (int m = 0; m <= 3; ++m)
                    o.expect(x.size(ks, m) == 1, "point at " + degree_string(ks, m));
        }
    }
    return o;
}

Outcome sphere_identification()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const auto a = multisimp_iso_on_truncation(at_gamma_level(delooped_f1(n), 1), sphere(n), 3);
        o.expect(static_cast<bool>(a), "n=" + std::to_string(n) + " sphere: " + a.witness);
        const auto b = multisimp_iso_on_truncation(sphere(n), cube_quotient(n), 3);
        o.expect(static_cast<bool>(b), "n=" + std::to_string(n) + " cube: " + b.witness);
    }
    return o;
}

Outcome realization()
{
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        const auto h = reduced_homology(at_gamma_level(delooped_f1(n), 1), n + 2);
        for (int q = 0; q <= n; ++q) {
            HomologyGroup expected;
            expected.betti = q == n ? 1 : 0;
            o.expect(h[q] == expected, "n=" + std::to_string(n) + " H~" + std::to_string(q) + " = " +
                                           h[q].to_string());
        }
    }
    return o;
}

Outcome torus()
{
    Outcome o;
    const auto h = unreduced(reduced_homology(at_gamma_level(deloop(lift(f1_power(2))), 1), 4));
    o.expect(h[0].to_string() == "Z", "H0 = " + h[0].to_string());
    o.expect(h[1].to_string() == "Z^2", "H1 = " + h[1].to_string());
    o.expect(h[2].to_string() == "Z", "H2 = " + h[2].to_string());
    return o;
}

Outcome face_action()
{
    Outcome o;
    for (int n = 0; n <= 2; ++n)
        for (int k = 1; k <= 3; ++k) {
            const Report r = verify_face_action(n, k, 2);
            o.expect(r.passed(), r.name + (r.passed() ? "" : ": " + r.violations.front()));
        }
    return o;
}

Outcome fold_construction_theorem()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const auto r = multisimp_iso_on_truncation(delooped_f1(n), fold_construction(sphere(n)), 3, 3);
        o.expect(static_cast<bool>(r), "n=" + std::to_string(n) + ": " + r.witness);
    }
    return o;
}

Outcome monomorphism()
{
    Outcome o;
    for (int n = 0; n <= 2; ++n) {
        const Report r = iota(n, 3, 3).report;
        o.expect(r.passed(), r.name + (r.passed() ? "" : ": " + r.violations.front()));
    }
    const auto h = eilenberg_maclane(z2);
    const auto eta = iota(0, 0, 4).transformation;
    for (int d = 0; d <= 4; ++d) {
        const FinFunction comp = eta.component({}, d);
        std::vector<std::string> image, axes;
        for (int i = 1; i <= d; ++i) {
            image.push_back(h.label(d, comp[i]));
            std::string t = "(";
            for (int j = 1; j <= d; ++j)
                t += std::string(j > 1 ? "," : "") + (i == j ? "1" : "0");
            axes.push_back(t + ")");
        }
        o.expect(image == axes && comp[0] == basepoint, "axes at <" + std::to_string(d) + ">");
    }
    return o;
}

Outcome torsion()
{
    Outcome o;
    const auto h = reduced_homology(at_gamma_level(em_deloop(z2, 1), 1), 4);
    o.expect(h[1].to_string() == "Z/2", "H1 = " + h[1].to_string());
    o.expect(h[2].to_string() == "0", "H2 = " + h[2].to_string());
    o.expect(h[3].to_string() == "Z/2", "H3 = " + h[3].to_string());
    return o;
}

Outcome plasmas()
{
    Outcome o;
    const auto found = classify_strict_plasmas_on_two();
    o.expect(found.size() == 4, "found " + std::to_string(found.size()));
    for (const auto& p : standard_plasmas())
        o.expect(std::count(found.begin(), found.end(), p) == 1, p.name() + " not found once");
    o.expect(static_cast<bool>(is_plasma_morphism({0, 1}, plasma_f(), plasma_z2())), "F -> Z/2");
    return o;
}

Outcome property_suites()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        const Report r = verify_functor(delooped_f1(n), 3, 3, true);
        o.expect(r.passed(), r.name + (r.passed() ? "" : ": " + r.violations.front()));
    }
    std::vector<DeltaMap> maps;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (const auto& d : enumerate_delta_maps(a, b))
                maps.push_back(d);
    for (const auto& alpha : maps) {
        o.expect(s_on_map(alpha).assignment() == oracle::circle_action(alpha), "oracle " + to_string(alpha));
        if (alpha.is_identity())
            o.expect(s_on_map(alpha).is_identity(), "identity " + to_string(alpha));
        for (const auto& beta : maps)
            if (alpha.domain() == beta.codomain())
                o.expect(s_on_map(compose(alpha, beta)) == compose(s_on_map(beta), s_on_map(alpha)),
                         "functor " + to_string(alpha) + " " + to_string(beta));
    }
    const std::vector<std::pair<SimplicialPointedSet, int>> complexes{
        {diagonal(sphere(1)), 5},
        {diagonal(at_gamma_level(delooped_f1(2), 1)), 4},
        {diagonal(at_gamma_level(delooped_f1(3), 1)), 5},
        {diagonal(at_gamma_level(delooped_f1(1), 3)), 4},
        {diagonal(at_gamma_level(deloop(lift(f1_power(2))), 1)), 4},
        {diagonal(at_gamma_level(em_deloop(z2, 1), 1)), 4},
        {diagonal(at_gamma_level(em_deloop(z2, 2), 1)), 3},
    };
    for (const auto& [s, levels] : complexes)
        o.expect(boundary_squared_zero(normalized_chains(s, levels)), "d^2 on " + s.name());
    for (const auto& x : {lift(f1()), lift(eilenberg_maclane(z2)), delooped_f1(1), delooped_f1(2)}) {
        const Report r = verify_right_inverse(x, 3, 3);
        o.expect(r.passed(), r.name);
    }
    const auto p = multisimp_iso_on_truncation(deloop(lift(gamma_product(f1(), f1()))),
                                               product(deloop(lift(f1())), deloop(lift(f1()))), 3, 3);
    o.expect(static_cast<bool>(p), "product preservation: " + p.witness);
    return o;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "circle lemma: BF1<1> is the simplicial circle, m <= 6", 1, circle_lemma},
        {2, "wedge decomposition, n <= 3, k <= 3, K = 3", 10, wedge_decomposition},
        {3, "structure census and zero-degree collapse, n <= 3, K = 3", 5, structure_census},
        {4, "B^n F1<1> ~ S^n ~ cube quotient, n <= 3, K = 3", 10, sphere_identification},
        {5, "reduced homology of diag B^n F1<1> is Z in degree n, N = n + 2", 30, realization},
        {6, "torus: H0 = Z, H1 = Z^2, H2 = Z at N = 4", 10, torus},
        {7, "face action, n <= 2, k <= 3, K = 2", 5, face_action},
        {8, "B^n F1 ~ (S^n)^vee, n <= 3, K = T = 3", 10, fold_construction_theorem},
        {9, "iota_n monomorphism for n <= 2, K = T = 3; axes at n = 0", 10, monomorphism},
        {10, "K(Z/2,1): H1 = Z/2, H2 = 0, H3 = Z/2 at N = 4", 10, torsion},
        {11, "exactly four strict-identity plasmas on {0,1}; F -> Z/2", 1, plasmas},
        {12, "property suites: functor laws, circle oracle, d^2 = 0, right inverse, products", 120,
         property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool ok = o.ok && in_time;
        failures += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s (%.3f s, limit %.0f s)", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, c.limit_seconds);
        if (!o.ok)
            std::printf(" witness: %s", o.detail.c_str());
        else if (!in_time)
            std::printf(" over time limit");
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
