#pragma once

// Command implementations behind the `fone` tool. Each command returns its
// rendered output and exit code so it can be driven in-process.

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gamma.hpp"
#include "homology.hpp"
#include "multisimplicial.hpp"
#include "plasma.hpp"
#include "report.hpp"

namespace fone::cli {

enum ExitCode : int { pass = 0, check_failure = 1, usage_error = 2 };

struct RunConfig {
    std::string command;
    int n = 2;             // delooping iterations
    int k = 1;             // Gamma level
    int k_max = 3;         // simplicial truncation K
    int t_max = 3;         // Gamma truncation T
    int levels = 4;        // diagonal level bound N
    std::string object = "sphere";
    std::string format = "human";
    std::string out;       // empty: stdout
};

struct CommandOutput {
    int exit_code = pass;
    std::string text;
};

/// Validates the bounds and selectors; returns an error message or empty.
inline std::string validate(const RunConfig& c)
{
    if (c.n < 0 || c.k < 0 || c.k_max < 0 || c.t_max < 0 || c.levels < 0)
        return "all bounds must be non-negative";
    if (c.object != "sphere" && c.object != "torus" && c.object != "em")
        return "unknown object '" + c.object + "' (expected sphere, torus or em)";
    if (c.format != "human" && c.format != "json")
        return "unknown format '" + c.format + "' (expected human or json)";
    return {};
}

struct CheckResult {
    std::string name;
    std::string statement;
    std::string scope;
    bool passed = false;
    std::vector<std::string> witnesses;
};

namespace detail {

using nlohmann::ordered_json;

inline ordered_json config_json(const RunConfig& c)
{
    return ordered_json{{"command", c.command}, {"n", c.n},          {"k", c.k},
                        {"K", c.k_max},         {"T", c.t_max},      {"N", c.levels},
                        {"object", c.object},   {"format", c.format}};
}

inline ordered_json document(const RunConfig& c)
{
    return ordered_json{{"schema", 1},
                        {"config", config_json(c)},
                        {"tables", ordered_json::array()},
                        {"census", ordered_json::array()},
                        {"checks", ordered_json::array()},
                        {"homology", ordered_json::array()}};
}

inline std::string scope_k(int k) { return "K=" + std::to_string(k); }
inline std::string scope_kt(int k, int t)
{
    return "K=" + std::to_string(k) + ", T=" + std::to_string(t);
}

inline std::string object_name(const RunConfig& c)
{
    if (c.object == "torus")
        return "B(F1^" + std::to_string(c.n) + ")<1>";
    if (c.object == "em")
        return "K(Z/2," + std::to_string(c.n) + ")<1>";
    return "B^" + std::to_string(c.n) + "F1<" + std::to_string(c.k) + ">";
}

inline MultiSimplicialPointedSet homology_object(const RunConfig& c)
{
    if (c.object == "torus")
        return at_gamma_level(deloop(lift(f1_power(c.n))), 1);
    if (c.object == "em")
        return at_gamma_level(em_deloop(FiniteAbelianGroup::cyclic(2), c.n, "HZ/2"), 1);
    return at_gamma_level(delooped_f1(c.n), c.k);
}

inline ordered_json homology_json(const HomologyReport& h)
{
    ordered_json groups = ordered_json::array();
    for (std::size_t q = 0; q < h.groups.size(); ++q)
        groups.push_back({{"degree", q},
                          {"betti", h.groups[q].betti},
                          {"torsion", h.groups[q].torsion},
                          {"group", h.groups[q].to_string()}});
    return {{"object", h.object},
            {"reduced", h.reduced},
            {"levels", h.levels},
            {"reliable_degree", h.reliable_degree()},
            {"groups", groups}};
}

inline ordered_json check_json(const CheckResult& c)
{
    return {{"name", c.name},
            {"statement", c.statement},
            {"scope", c.scope},
            {"passed", c.passed},
            {"witnesses", c.witnesses}};
}

struct TableRow {
    std::vector<int> degree;
    std::size_t size = 0;
    std::size_t nondegenerate = 0;
};

inline std::vector<TableRow> value_table(const RunConfig& c)
{
    const auto x = at_gamma_level(delooped_f1(c.n), c.k);
    std::vector<TableRow> rows;
    for (const auto& ks : degrees_within(c.n, c.k_max))
        rows.push_back({ks, x.size(ks), nondegenerate_elements(x, ks).size()});
    return rows;
}

inline ordered_json table_json(const RunConfig& c, const std::vector<TableRow>& rows)
{
    ordered_json degrees = ordered_json::array(), sizes = ordered_json::array();
    for (const auto& r : rows) {
        degrees.push_back(r.degree);
        sizes.push_back(r.size);
    }
    return {{"kind", "value_sizes"},
            {"object", "B^" + std::to_string(c.n) + "F1<" + std::to_string(c.k) + ">"},
            {"degrees", degrees},
            {"sizes", sizes}};
}

inline ordered_json census_json(const RunConfig& c, const std::vector<TableRow>& rows)
{
    ordered_json out = ordered_json::array();
    for (const auto& r : rows)
        out.push_back({{"object", "B^" + std::to_string(c.n) + "F1<" + std::to_string(c.k) + ">"},
                       {"degree", r.degree},
                       {"nondegenerate", r.nondegenerate}});
    return out;
}

/// B^n F1(d_i^k) at [1,...,1] for k = max(config k, 2) and all i.
inline ordered_json face_action_json(const RunConfig& c)
{
    const auto x = delooped_f1(c.n);
    const int k = std::max(c.k, 2);
    const std::vector<int> ones(c.n, 1);
    ordered_json out = ordered_json::array();
    for (int i = 0; i <= k; ++i)
        out.push_back({{"kind", "face_action"},
                       {"object", "B^" + std::to_string(c.n) + "F1"},
                       {"degree", ones},
                       {"face", i},
                       {"from", k},
                       {"map", x.act_gamma(ones, gamma_face(i, k))}});
    return out;
}

inline CommandOutput emit(const RunConfig& c, const std::string& text, int code)
{
    if (c.out.empty())
        return {code, text};
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        return {usage_error, "cannot write to " + c.out + "\n"};
    f << text;
    if (!f)
        return {usage_error, "cannot write to " + c.out + "\n"};
    return {code, ""};
}

}  // namespace detail

/// Every verification the tool knows, within the configured truncations.
inline std::vector<CheckResult> run_checks(const RunConfig& c)
{
    using namespace detail;
    std::vector<CheckResult> out;
    const int n = c.n, kk = c.k_max, tt = c.t_max;
    const auto bn = delooped_f1(n);
    const auto bn1 = at_gamma_level(bn, 1);

    // A check that throws (for instance on an oversized level) fails with the message.
    auto attempt = [&out](std::string name, std::string statement, std::string scope,
                          const std::function<CheckResult(CheckResult)>& body) {
        CheckResult r{std::move(name), std::move(statement), std::move(scope), true, {}};
        try {
            r = body(r);
        } catch (const std::exception& e) {
            r.witnesses.push_back(e.what());
        }
        r.passed = r.passed && r.witnesses.empty();
        out.push_back(std::move(r));
    };
    auto iso_into = [](CheckResult& r, const IsoResult& iso) {
        if (!iso)
            r.witnesses.push_back(iso.witness);
    };
    auto report_into = [](CheckResult& r, const Report& rep) {
        r.witnesses.insert(r.witnesses.end(), rep.violations.begin(), rep.violations.end());
    };

    attempt("plasma axioms",
            "exactly four strict-identity commutative plasmas on {0,1}; F -> Z/2 is a plasma "
            "morphism",
            "exhaustive", [](CheckResult r) {
                const auto found = classify_strict_plasmas_on_two();
                if (found.size() != 4)
                    r.witnesses.push_back("found " + std::to_string(found.size()) + " plasmas");
                for (const auto& p : standard_plasmas())
                    if (!validate_plasma(p).empty())
                        r.witnesses.push_back(p.name() + " fails validation");
                if (!is_plasma_morphism({0, 1}, plasma_f(), plasma_z2()))
                    r.witnesses.push_back("F -> Z/2 is not a morphism");
                return r;
            });
    attempt("zero-degree collapse", "B^n F1 is a single point at every multidegree with some k_i = 0",
            scope_kt(kk, tt), [&](CheckResult r) {
                for (const auto& ks : degrees_within(n, kk)) {
                    if (std::find(ks.begin(), ks.end(), 0) == ks.end())
                        continue;
                    for (int m = 0; m <= tt; ++m)
                        if (bn.size(ks, m) != 1)
                            r.witnesses.push_back("size " + std::to_string(bn.size(ks, m)) +
                                                  " at " + degree_string(ks, m));
                }
                return r;
            });
    attempt("structure census",
            "B^n F1<1> has exactly one non-degenerate non-basepoint cell, at [1,...,1]", scope_k(kk),
            [&](CheckResult r) {
                for (const auto& [ks, count] : nondegenerate_census(bn1, kk)) {
                    const bool top =
                        std::all_of(ks.begin(), ks.end(), [](int v) { return v == 1; });
                    if (count != (top ? 1U : 0U))
                        r.witnesses.push_back(std::to_string(count) +
                                              " non-degenerate cells at " + degree_string(ks));
                }
                return r;
            });
    attempt("wedge decomposition", "B^n F1<k> is isomorphic to the k-fold wedge of B^n F1<1>",
            scope_k(kk), [&](CheckResult r) {
                iso_into(r, multisimp_iso_on_truncation(at_gamma_level(bn, c.k),
                                                        wedge_power(bn1, c.k), kk));
                return r;
            });
    attempt("sphere identification", "B^n F1<1> is isomorphic to the sphere S^n", scope_k(kk),
            [&](CheckResult r) {
                iso_into(r, multisimp_iso_on_truncation(bn1, sphere(n), kk));
                return r;
            });
    attempt("cube quotient", "S^n agrees with the n-cube modulo its boundary", scope_k(kk),
            [&](CheckResult r) {
                iso_into(r, multisimp_iso_on_truncation(sphere(n), cube_quotient(n), kk));
                return r;
            });
    attempt("fold construction", "B^n F1 is isomorphic to (S^n)^vee as a Gamma-object",
            scope_kt(kk, tt), [&](CheckResult r) {
                iso_into(r, multisimp_iso_on_truncation(bn, fold_construction(sphere(n)), kk, tt));
                return r;
            });
    if (n >= 1)
        attempt("torus", "B(F1^n)<1> is the simplicial n-torus", scope_k(kk), [&](CheckResult r) {
            auto circles = sphere(1);
            for (int i = 1; i < n; ++i)
                circles = product(circles, sphere(1));
            iso_into(r, multisimp_iso_on_truncation(at_gamma_level(deloop(lift(f1_power(n))), 1),
                                                    circles, kk));
            return r;
        });
    attempt("face action",
            "d_0, d_k project away an outer summand; d_i, 0<i<k, folds summands i, i+1",
            scope_k(std::min(kk, 2)), [&](CheckResult r) {
                for (int k = 1; k <= std::max(c.k, 3); ++k) {
                    const Report rep = verify_face_action(n, k, std::min(kk, 2));
                    for (const auto& v : rep.violations)
                        r.witnesses.push_back(rep.name + ": " + v);
                }
                return r;
            });
    attempt("iota monomorphism", "iota_n : B^n F1 -> K(Z/2,n) is levelwise injective and natural",
            scope_kt(kk, tt), [&](CheckResult r) {
                report_into(r, iota(n, kk, tt).report);
                return r;
            });
    attempt("axes", "iota_0 at <d> picks out the d axes of (Z/2)^d", "T=" + std::to_string(tt),
            [&](CheckResult r) {
                const auto z2 = eilenberg_maclane(FiniteAbelianGroup::cyclic(2), "HZ/2");
                report_into(r, verify_transformation(axes_inclusion(), f1(), z2, tt, true));
                for (int d = 0; d <= tt; ++d) {
                    const FinFunction comp = axes_inclusion().component(d);
                    for (int i = 1; i <= d; ++i) {
                        std::string expected = "(";
                        for (int j = 1; j <= d; ++j)
                            expected += std::string(j > 1 ? "," : "") + (j == i ? "1" : "0");
                        const std::string label = z2.label(d, comp[i]);
                        if (label != expected + ")")
                            r.witnesses.push_back("element " + std::to_string(i) + " of <" +
                                                  std::to_string(d) + "> goes to " + label);
                    }
                }
                return r;
            });
    attempt("product preservation", "B(F1 x F1) is isomorphic to BF1 x BF1", scope_kt(kk, tt),
            [&](CheckResult r) {
                const auto lhs = deloop(lift(gamma_product(f1(), f1())));
                const auto rhs = product(deloop(lift(f1())), deloop(lift(f1())));
                iso_into(r, multisimp_iso_on_truncation(lhs, rhs, kk, tt));
                return r;
            });
    attempt("right inverse", "evaluation at [1] after B is the identity", scope_kt(kk, tt),
            [&](CheckResult r) {
                report_into(r, verify_right_inverse(lift(f1()), kk, tt));
                report_into(r, verify_right_inverse(
                                   lift(eilenberg_maclane(FiniteAbelianGroup::cyclic(2))), kk, tt));
                report_into(r, verify_right_inverse(bn, kk, tt));
                return r;
            });
    attempt("functor laws", "B^n F1 is a functor within the truncation", scope_kt(kk, tt),
            [&](CheckResult r) {
                report_into(r, verify_functor(bn, kk, tt, false));
                return r;
            });
    attempt("sphere homology", "reduced homology of diag B^n F1<1> is Z in degree n and 0 below",
            "N=" + std::to_string(c.levels), [&](CheckResult r) {
                const auto h = reduced_homology(bn1, c.levels);
                for (int q = 0; q <= std::min(n, h.reliable_degree()); ++q) {
                    HomologyGroup expected;
                    expected.betti = q == n ? 1 : 0;
                    if (h[q] != expected)
                        r.witnesses.push_back("H~" + std::to_string(q) + " = " + h[q].to_string());
                }
                return r;
            });
    return out;
}

inline CommandOutput cmd_table(const RunConfig& c)
{
    if (auto err = validate(c); !err.empty())
        return {usage_error, err + "\n"};
    using namespace detail;
    const auto rows = value_table(c);
    if (c.format == "json") {
        auto doc = document(c);
        doc["tables"].push_back(table_json(c, rows));
        doc["census"] = census_json(c, rows);
        return emit(c, doc.dump(2) + "\n", pass);
    }
    std::ostringstream os;
    os << "B^" << c.n << "F1<" << c.k << "> (K=" << c.k_max << ")\n";
    os << "degree        size  non-degenerate\n";
    for (const auto& r : rows) {
        std::string d = degree_string(r.degree);
        d.resize(std::max<std::size_t>(d.size(), 12), ' ');
        os << d << "  " << r.size << "  " << r.nondegenerate << (r.nondegenerate ? "  *" : "")
           << '\n';
    }
    return emit(c, os.str(), pass);
}

inline CommandOutput cmd_verify(const RunConfig& c)
{
    if (auto err = validate(c); !err.empty())
        return {usage_error, err + "\n"};
    using namespace detail;
    const auto checks = run_checks(c);
    const bool ok =
        std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
    if (c.format == "json") {
        auto doc = document(c);
        for (const auto& r : checks)
            doc["checks"].push_back(check_json(r));
        return emit(c, doc.dump(2) + "\n", ok ? pass : check_failure);
    }
    std::ostringstream os;
    os << "verifying B^" << c.n << "F1 within K=" << c.k_max << ", T=" << c.t_max
       << ", N=" << c.levels << "\n";
    for (const auto& r : checks) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.name << " [" << r.scope << "]: " << r.statement
           << '\n';
        for (const auto& w : r.witnesses)
            os << "      witness: " << w << '\n';
    }
    os << (ok ? "all checks passed\n" : "some checks failed\n");
    return emit(c, os.str(), ok ? pass : check_failure);
}

inline CommandOutput cmd_homology(const RunConfig& c)
{
    if (auto err = validate(c); !err.empty())
        return {usage_error, err + "\n"};
    using namespace detail;
    if (c.object == "torus" && c.n < 1)
        return {usage_error, "the torus needs n >= 1\n"};
    HomologyReport h;
    try {
        h = reduced_homology(homology_object(c), c.levels);
    } catch (const std::length_error& e) {
        return {usage_error, std::string(e.what()) + "\n"};
    }
    h.object = "diag " + object_name(c);
    if (c.format == "json") {
        auto doc = document(c);
        doc["homology"].push_back(homology_json(h));
        return emit(c, doc.dump(2) + "\n", pass);
    }
    return emit(c, h.to_string(), pass);
}

inline CommandOutput cmd_export(const RunConfig& c)
{
    if (auto err = validate(c); !err.empty())
        return {usage_error, err + "\n"};
    using namespace detail;
    const auto rows = value_table(c);
    auto doc = document(c);
    doc["tables"].push_back(table_json(c, rows));
    for (auto& f : face_action_json(c))
        doc["tables"].push_back(std::move(f));
    doc["census"] = census_json(c, rows);
    const auto checks = run_checks(c);
    for (const auto& r : checks)
        doc["checks"].push_back(check_json(r));
    try {
        auto h = reduced_homology(at_gamma_level(delooped_f1(c.n), c.k), c.levels);
        h.object = "diag B^" + std::to_string(c.n) + "F1<" + std::to_string(c.k) + ">";
        doc["homology"].push_back(homology_json(h));
    } catch (const std::length_error& e) {
        return {usage_error, std::string(e.what()) + "\n"};
    }
    const bool ok =
        std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
    return emit(c, doc.dump(2) + "\n", ok ? pass : check_failure);
}

inline CommandOutput dispatch(const RunConfig& c)
{
    if (c.command == "table")
        return cmd_table(c);
    if (c.command == "verify")
        return cmd_verify(c);
    if (c.command == "homology")
        return cmd_homology(c);
    if (c.command == "export")
        return cmd_export(c);
    return {usage_error, "unknown command '" + c.command + "'\n"};
}

}  // namespace fone::cli
