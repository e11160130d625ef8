#pragma once

/**
 * @file catalog.hpp
 * @brief Hard-coded descriptors for the known Sury-type identities, with
 * parameter grids for the parametrized families.
 *
 * Families built from the offset theorem (eq19, eq44, eq45) are generated by
 * the engine and then polished: scaled by a constant and given the
 * simplified left-hand side (a single Fibonacci term). Every entry is
 * checked by exact verification, which also certifies each polish step.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idforge/engine.hpp"
#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"
#include "idforge/sequences.hpp"

namespace idforge {

using Params = std::map<std::string, Rational>;

struct CatalogEntry {
    std::string id;      // instance id, e.g. "eq8[m=6]"; unparametrized entries use the family id
    std::string family;  // e.g. "eq8"
    IdentityDescriptor descriptor;
    std::string citation;
    Params params;
};

namespace catalog_detail {

inline const SequenceDef& fib_def() {
    static const SequenceDef def = named_def(Family::Fibonacci);
    return def;
}
inline const SequenceDef& lucas_def() {
    static const SequenceDef def = named_def(Family::Lucas);
    return def;
}

inline Rational F(std::int64_t n) { return term(fib_def(), n); }
inline Rational L(std::int64_t n) { return term(lucas_def(), n); }

inline std::int64_t as_int(const Params& p, const std::string& key) {
    const Rational& v = p.at(key);
    if (!v.is_integer()) {
        throw UsageError("parameter " + key + " must be an integer, got " + v.to_string());
    }
    return static_cast<std::int64_t>(v.num());
}

/// Sum side sum_{i=0..n} t^{n-i} * summand, scaled by coef.
inline SumSide convolution(Rational coef, const Rational& t, Summand s) {
    return SumSide{std::move(coef), t, t.reciprocal(), {std::move(s)}};
}

/// Sum side coef * sum_{i=0..n} beta^i * summands.
inline SumSide weighted(Rational coef, Rational beta, std::vector<Summand> summands) {
    return SumSide{std::move(coef), 1, std::move(beta), std::move(summands)};
}

/// Keeps the generated sum side, replacing the left side and re-expressing the summand.
inline IdentityDescriptor polish(IdentityDescriptor raw, std::vector<GeometricTerm> lhs, Summand summand) {
    raw.lhs = std::move(lhs);
    raw.rhs.summands = {std::move(summand)};
    return raw;
}

struct FamilySpec {
    std::string_view id;
    std::string_view citation;
    std::vector<std::string> param_names;
    std::function<std::vector<Params>()> grid;
    std::function<IdentityDescriptor(const Params&)> build;
};

inline std::vector<Params> single_param(const std::string& name, std::vector<Rational> values) {
    std::vector<Params> out;
    for (auto& v : values) {
        out.push_back({{name, std::move(v)}});
    }
    return out;
}

inline std::vector<Params> no_params() { return {Params{}}; }

inline std::vector<FamilySpec> build_families() {
    const SequenceDef& Fs = fib_def();
    const SequenceDef& Ls = lucas_def();
    const SequenceDef Ps = named_def(Family::Pell);
    const SequenceDef Qs = named_def(Family::PellLucas);
    const SequenceDef Bs = named_def(Family::Bronze);
    const SequenceDef As = named_def(Family::A015530);

    std::vector<FamilySpec> fams;

    fams.push_back({"eq1", "Sury's identity: 2^{n+1} F_{n+1} = sum 2^i L_i", {}, no_params, [Fs, Ls](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{2, 2, Fs, 1, 1}};
                        d.rhs = weighted(1, 2, {Summand{1, Ls, 1, 0}});
                        return d;
                    }});

    fams.push_back({"eq2", "Martinjak's telescoping identity: (-1/2)^n F_{n+1} = sum (-1/2)^i L_{i+1}", {},
                    no_params, [Fs, Ls](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, Rational(-1, 2), Fs, 1, 1}};
                        d.rhs = weighted(1, Rational(-1, 2), {Summand{1, Ls, 1, 1}});
                        return d;
                    }});

    fams.push_back({"eq3", "convolution form: F_{n+1} = sum (-2)^{n-i} L_{i+1}", {}, no_params,
                    [Fs, Ls](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Fs, 1, 1}};
                        d.rhs = convolution(1, -2, Summand{1, Ls, 1, 1});
                        return d;
                    }});

    fams.push_back({"eq4", "Marques: 3^{n+1} F_{n+1} = sum 3^i (L_i + F_{i+1})", {}, no_params,
                    [Fs, Ls](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{3, 3, Fs, 1, 1}};
                        d.rhs = weighted(1, 3, {Summand{1, Ls, 1, 0}, Summand{1, Fs, 1, 1}});
                        return d;
                    }});

    fams.push_back({"eq5", "Edgar: t^{n+1} F_{n+1} = sum t^i (L_i + (t-2) F_{i+1})",
                    {"t"},
                    [] { return single_param("t", {2, 3, Rational(-1, 2), 5}); },
                    [Fs, Ls](const Params& p) {
                        const Rational& t = p.at("t");
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{t, t, Fs, 1, 1}};
                        d.rhs = weighted(1, t, {Summand{1, Ls, 1, 0}, Summand{t - 2, Fs, 1, 1}});
                        return d;
                    }});

    fams.push_back({"eq7", "Abd-Elhameed-Zeyada: t^{n+1} U_{n+1} = (1/a) sum t^i (V_i + (at-2) U_{i+1})",
                    {"a", "b", "t"},
                    [] {
                        std::vector<Params> out;
                        for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 1}}) {
                            for (const Rational& t : {Rational(1), Rational(2), Rational(-1, 2)}) {
                                out.push_back({{"a", a}, {"b", b}, {"t", t}});
                            }
                        }
                        return out;
                    },
                    [](const Params& p) {
                        const Rational &a = p.at("a"), &b = p.at("b"), &t = p.at("t");
                        if (a.is_zero() || t.is_zero()) {
                            throw UsageError("eq7 needs a, b, t all nonzero");
                        }
                        SequenceDef U = named_def(NamedFamily::generalized_u(a, b));
                        SequenceDef V = named_def(NamedFamily::generalized_v(a, b));
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{t, t, U, 1, 1}};
                        d.rhs = weighted(a.reciprocal(), t, {Summand{1, V, 1, 0}, Summand{a * t - 2, U, 1, 1}});
                        return d;
                    }});

    fams.push_back({"eq8", "j-step Lucas weighted sums with constant term (m = 3, 6, 9)",
                    {"m"},
                    [] { return single_param("m", {3, 6, 9}); },
                    [Fs, Ls](const Params& p) {
                        std::int64_t m = as_int(p, "m");
                        IdentityDescriptor d;
                        switch (m) {
                            case 3:  // sum (-2)^i L_{3i} = 2 - (-2)^{n+1} F_{3n}
                                d.lhs = {GeometricTerm::constant(2), GeometricTerm{2, -2, Fs, 3, 0}};
                                d.rhs = weighted(1, -2, {Summand{1, Ls, 3, 0}});
                                break;
                            case 6:  // 4 sum 9^i L_{6i} = 9^{n+1} F_{6n} + 8
                                d.lhs = {GeometricTerm{9, 9, Fs, 6, 0}, GeometricTerm::constant(8)};
                                d.rhs = weighted(4, 9, {Summand{1, Ls, 6, 0}});
                                break;
                            case 9:  // 17 sum (-38)^i L_{9i} = 34 - (-38)^{n+1} F_{9n}
                                d.lhs = {GeometricTerm::constant(34), GeometricTerm{38, -38, Fs, 9, 0}};
                                d.rhs = weighted(17, -38, {Summand{1, Ls, 9, 0}});
                                break;
                            default: throw UsageError("eq8 needs m in {3, 6, 9}");
                        }
                        return d;
                    }});

    fams.push_back({"eq8b", "Adegoke-Frontczak form: c sum (1/r)^i L_{ji} = F_{j(n+1)} / r^n",
                    {"j"},
                    [] { return single_param("j", {3, 6, 9}); },
                    [Fs, Ls](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        // zero-offset Lucas case divided by (L_j/2)^n
                        Rational coef = F(j) / 2;
                        Rational r = 2 / L(j);
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, r, Fs, j, j}};
                        d.rhs = weighted(coef, r, {Summand{1, Ls, j, 0}});
                        return d;
                    }});

    fams.push_back({"eq9", "j-step Fibonacci numbers from offset-1 sums (lucas=0: F summand, lucas=1: L summand)",
                    {"j", "lucas"},
                    [] {
                        std::vector<Params> out;
                        for (int j : {2, 3, 4}) {
                            for (int v : {0, 1}) {
                                out.push_back({{"j", j}, {"lucas", v}});
                            }
                        }
                        return out;
                    },
                    [Fs, Ls](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        bool lucas = as_int(p, "lucas") != 0;
                        // F_{j(n+1)} = F_j sum F_{j-1}^{n-i} F_{ji+1} = F_j sum (-L_{j-1})^{n-i} L_{ji+1}
                        Rational t = lucas ? -L(j - 1) : F(j - 1);
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Fs, j, j}};
                        d.rhs = convolution(F(j), t, Summand{1, lucas ? Ls : Fs, j, 1});
                        return d;
                    }});

    fams.push_back({"eq10", "Pell offset sums: P_{n+1} = (1/P_k) sum (-P_{k-1}/P_k)^{n-i} P_{i+k}",
                    {"k"},
                    [] { return single_param("k", {2, 3, 4}); },
                    [Ps](const Params& p) {
                        std::int64_t k = as_int(p, "k");
                        Rational pk = term(Ps, k);
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Ps, 1, 1}};
                        d.rhs = convolution(pk.reciprocal(), -term(Ps, k - 1) / pk, Summand{1, Ps, 1, k});
                        return d;
                    }});

    fams.push_back({"eq11", "Abd-Elhameed-Zeyada Pell form: (1/3)^{n+1} Q_{n+1} = 1 - (2/3) sum (1/3)^i P_{i-1}",
                    {}, no_params, [Ps, Qs](const Params&) {
                        IdentityDescriptor d;
                        // the constant 1 moves to the non-sum side
                        d.lhs = {GeometricTerm{Rational(1, 3), Rational(1, 3), Qs, 1, 1},
                                 GeometricTerm::constant(-1)};
                        d.rhs = weighted(Rational(-2, 3), Rational(1, 3), {Summand{1, Ps, 1, -1}});
                        return d;
                    }});

    fams.push_back({"eq12", "bronze j-step sums: B_{j(n+1)} = B_j sum B_{j-1}^{n-i} B_{ji+1}",
                    {"j"},
                    [] { return single_param("j", {2, 3, 4}); },
                    [Bs](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Bs, j, j}};
                        d.rhs = convolution(term(Bs, j), term(Bs, j - 1), Summand{1, Bs, j, 1});
                        return d;
                    }});

    fams.push_back({"eq19", "Lucas offset family: F_{n+1} = (1/L_k) sum (-L_{k-1}/L_k)^{n-i} L_{i+k}",
                    {"k"},
                    [] { return single_param("k", {1, 2, 3, 4}); },
                    [Fs, Ls](const Params& p) {
                        std::int64_t k = as_int(p, "k");
                        // 2 L_{n+2} - L_{n+1} = 5 F_{n+1}
                        IdentityDescriptor raw = rewrite_scale(theorem2_descriptor(Ls, k), Rational(1, 5), 1);
                        return polish(std::move(raw), {GeometricTerm{1, 1, Fs, 1, 1}}, Summand{1, Ls, 1, k});
                    }});

    fams.push_back({"eq23", "j-step Fibonacci numbers, zero offset: "
                            "L_j^{n+1} F_{j(n-1)} + (-1)^{j(n+1)} F_{2j} = sum (-1)^{j(n+i)} L_j^i F_{ji}",
                    {"j"},
                    [] { return single_param("j", {1, 2, 3, 4, 5, 6, 7, 8, 9}); },
                    [Fs](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        Rational s = sign_pow(j);
                        Rational lj = L(j);
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{lj, lj, Fs, j, -j}, GeometricTerm::constant(s * F(2 * j), s)};
                        d.rhs = SumSide{1, s, s * lj, {Summand{1, Fs, j, 0}}};
                        return d;
                    }});

    fams.push_back({"eq33", "j-step Lucas numbers, zero offset: "
                            "2 (L_j/2)^{n+1} F_{jn}/F_j + 2(-1)^{jn} = sum (-1)^{j(n+i)} (L_j/2)^i L_{ji}",
                    {"j"},
                    [] { return single_param("j", {1, 2, 3, 4, 5, 6, 7, 8, 9}); },
                    [Fs, Ls](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        Rational s = sign_pow(j);
                        Rational half = L(j) / 2;
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{2 * half / F(j), half, Fs, j, 0}, GeometricTerm::constant(2, s)};
                        d.rhs = SumSide{1, s, s * half, {Summand{1, Ls, j, 0}}};
                        return d;
                    }});

    fams.push_back({"eq44", "j-step Fibonacci numbers with offset k: "
                            "F_{j(n+1)} = (F_j/F_k) sum ((-1)^{k+1} F_{j-k}/F_k)^{n-i} F_{ji+k}",
                    {"j", "k"},
                    [] {
                        std::vector<Params> out;
                        for (int j = 2; j <= 6; ++j) {
                            for (int k = -(j - 1); k <= j - 1; ++k) {
                                if (k != 0) {
                                    out.push_back({{"j", j}, {"k", k}});
                                }
                            }
                        }
                        return out;
                    },
                    [Fs](const Params& p) {
                        std::int64_t j = as_int(p, "j"), k = as_int(p, "k");
                        // Y_n = F_{jn+k}; Catalan gives Y_0 Y_{n+2} - Y_1 Y_{n+1} = (-1)^{k+1} F_j F_{j(n+1)}
                        IdentityDescriptor raw = theorem2_descriptor(subsequence_def(Fs, j, k), 0);
                        raw = rewrite_scale(raw, (sign_pow(k + 1) * F(j)).reciprocal(), 1);
                        return polish(std::move(raw), {GeometricTerm{1, 1, Fs, j, j}}, Summand{1, Fs, j, k});
                    }});

    fams.push_back({"eq45", "j-step Lucas numbers with offset k: "
                            "F_{j(n+1)} = (F_j/L_k) sum ((-1)^k L_{j-k}/L_k)^{n-i} L_{ji+k}",
                    {"j", "k"},
                    [] {
                        std::vector<Params> out;
                        for (int j = 1; j <= 6; ++j) {
                            for (int k = -(j - 1); k <= j - 1; ++k) {
                                out.push_back({{"j", j}, {"k", k}});
                            }
                        }
                        return out;
                    },
                    [Fs, Ls](const Params& p) {
                        std::int64_t j = as_int(p, "j"), k = as_int(p, "k");
                        // Y_n = L_{jn+k}; Y_0 Y_{n+2} - Y_1 Y_{n+1} = 5 (-1)^k F_j F_{j(n+1)}
                        IdentityDescriptor raw = theorem2_descriptor(subsequence_def(Ls, j, k), 0);
                        raw = rewrite_scale(raw, (5 * sign_pow(k) * F(j)).reciprocal(), 1);
                        return polish(std::move(raw), {GeometricTerm{1, 1, Fs, j, j}}, Summand{1, Ls, j, k});
                    }});

    fams.push_back({"eqDT", "earlier weighted Fibonacci sums: sum (1/L_j)^i F_{ji} in closed form",
                    {"j"},
                    [] { return single_param("j", {2, 3, 4}); },
                    [Fs](const Params& p) {
                        std::int64_t j = as_int(p, "j");
                        // j=2: 3 - F_{2(n+2)}/3^n, j=3: F_{3(n+2)}/4^n - 8, j=4: 21 - F_{4(n+2)}/7^n
                        Rational s = sign_pow(j);
                        Rational r = L(j).reciprocal();
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm::constant(s * F(2 * j)), GeometricTerm{-s, r, Fs, j, 2 * j}};
                        d.rhs = weighted(1, r, {Summand{1, Fs, j, 0}});
                        return d;
                    }});

    fams.push_back({"eqPP", "Pell numbers at offset k = -1: P_{n+1} = sum 2^{n-i} P_{i-1}", {}, no_params,
                    [Ps](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Ps, 1, 1}};
                        d.rhs = convolution(1, 2, Summand{1, Ps, 1, -1});
                        return d;
                    }});

    fams.push_back({"eqPP2", "equivalent Pell form: P_{n+2} = 2^{n+1} + sum 2^{n-i} P_i", {}, no_params,
                    [Ps](const Params&) {
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, Ps, 1, 2}, GeometricTerm::constant(-2, 2)};
                        d.rhs = convolution(1, 2, Summand{1, Ps, 1, 0});
                        return d;
                    }});

    fams.push_back({"eqA", "A015530 (a_n = 4a_{n-1} + 3a_{n-2}): a_{n+1} = (1/a_k) sum (-3a_{k-1}/a_k)^{n-i} a_{i+k}",
                    {"k"},
                    [] { return single_param("k", {2, 3}); },
                    [As](const Params& p) {
                        std::int64_t k = as_int(p, "k");
                        Rational ak = term(As, k);
                        IdentityDescriptor d;
                        d.lhs = {GeometricTerm{1, 1, As, 1, 1}};
                        d.rhs = convolution(ak.reciprocal(), -3 * term(As, k - 1) / ak, Summand{1, As, 1, k});
                        return d;
                    }});

    return fams;
}

inline const std::vector<FamilySpec>& families() {
    static const std::vector<FamilySpec> fams = build_families();
    return fams;
}

inline std::string instance_id(const FamilySpec& fam, const Params& params) {
    if (fam.param_names.empty()) {
        return std::string(fam.id);
    }
    std::string out = std::string(fam.id) + "[";
    bool first = true;
    for (const auto& name : fam.param_names) {
        out += (first ? "" : ",") + name + "=" + params.at(name).to_string();
        first = false;
    }
    return out + "]";
}

inline CatalogEntry make_entry(const FamilySpec& fam, const Params& params) {
    CatalogEntry e;
    e.family = std::string(fam.id);
    e.id = instance_id(fam, params);
    e.citation = std::string(fam.citation);
    e.params = params;
    e.descriptor = fam.build(params);
    e.descriptor.id = e.id;
    e.descriptor.citation = e.citation;
    e.descriptor.n_min = 0;
    return e;
}

}  // namespace catalog_detail

/// Family ids in catalog order.
inline std::vector<std::string> catalog_family_ids() {
    std::vector<std::string> out;
    for (const auto& fam : catalog_detail::families()) {
        out.emplace_back(fam.id);
    }
    return out;
}

/// One instantiated entry; params must lie on the family's grid.
inline CatalogEntry entry(std::string_view id, const Params& params = {}) {
    for (const auto& fam : catalog_detail::families()) {
        if (fam.id != id) {
            continue;
        }
        for (const auto& [name, value] : params) {
            if (std::find(fam.param_names.begin(), fam.param_names.end(), name) == fam.param_names.end()) {
                throw UsageError("catalog entry " + std::string(id) + " has no parameter '" + name + "'");
            }
        }
        for (const auto& candidate : fam.grid()) {
            if (candidate == params) {
                return catalog_detail::make_entry(fam, params);
            }
        }
        std::string names;
        for (const auto& n : fam.param_names) {
            names += (names.empty() ? "" : ", ") + n;
        }
        throw UsageError("parameters for " + std::string(id) + " are missing or outside the catalog grid" +
                         (names.empty() ? std::string() : " (parameters: " + names + ")"));
    }
    throw UsageError("unknown catalog id '" + std::string(id) + "'");
}

/// Every family over its whole grid, in deterministic order.
inline std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> out;
    for (const auto& fam : catalog_detail::families()) {
        for (const auto& params : fam.grid()) {
            out.push_back(catalog_detail::make_entry(fam, params));
        }
    }
    return out;
}

}  // namespace idforge
