#pragma once

/**
 * @file io.hpp
 * @brief JSON documents (schema_version 1), LaTeX and plain-text rendering
 * of identity descriptors.
 *
 * Rationals always travel as canonical "p/q" strings ("p" when q = 1).
 */

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "idforge/engine.hpp"
#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"
#include "idforge/sequences.hpp"

namespace idforge {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace io_detail {

inline Json seq_to_json(const SequenceDef& s) {
    Json j;
    j["c1"] = s.c1().to_string();
    j["c2"] = s.c2().to_string();
    j["x0"] = s.x0().to_string();
    j["x1"] = s.x1().to_string();
    j["label"] = s.label();
    return j;
}

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

inline void expect_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> keys) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (auto k : keys) {
            known = known || (k == key);
        }
        if (!known) {
            fail(path + "/" + key, "unknown field");
        }
    }
    for (auto k : keys) {
        if (!j.contains(k)) {
            fail(path + "/" + std::string(k), "missing field");
        }
    }
}

inline Rational rational_at(const Json& j, std::string_view key, const std::string& path) {
    std::string where = path + "/" + std::string(key);
    const Json& v = j.at(std::string(key));
    if (!v.is_string()) {
        fail(where, "expected a rational string \"p/q\"");
    }
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

inline std::int64_t int_at(const Json& j, std::string_view key, const std::string& path) {
    const Json& v = j.at(std::string(key));
    if (!v.is_number_integer()) {
        fail(path + "/" + std::string(key), "expected an integer");
    }
    return v.get<std::int64_t>();
}

inline std::string string_at(const Json& j, std::string_view key, const std::string& path) {
    const Json& v = j.at(std::string(key));
    if (!v.is_string()) {
        fail(path + "/" + std::string(key), "expected a string");
    }
    return v.get<std::string>();
}

inline SequenceDef seq_from_json(const Json& j, const std::string& path) {
    expect_keys(j, path, {"c1", "c2", "x0", "x1", "label"});
    Rational c2 = rational_at(j, "c2", path);
    if (c2.is_zero()) {
        fail(path + "/c2", "c2 must be nonzero");
    }
    return {rational_at(j, "c1", path), c2, rational_at(j, "x0", path), rational_at(j, "x1", path),
            string_at(j, "label", path)};
}

inline std::int64_t stride_at(const Json& j, const std::string& path) {
    std::int64_t stride = int_at(j, "stride", path);
    if (stride < 0) {
        fail(path + "/stride", "stride must be >= 0");
    }
    return stride;
}

}  // namespace io_detail

/// Deterministic key order; no whitespace variation.
inline std::string to_json(const IdentityDescriptor& d, int indent = -1) {
    using io_detail::seq_to_json;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["id"] = d.id;
    doc["n_min"] = d.n_min;
    doc["citation"] = d.citation;
    Json lhs = Json::array();
    for (const auto& t : d.lhs) {
        Json jt;
        jt["coef"] = t.coef.to_string();
        jt["ratio"] = t.ratio.to_string();
        jt["seq"] = t.seq ? seq_to_json(*t.seq) : Json(nullptr);
        jt["stride"] = t.stride;
        jt["offset"] = t.offset;
        lhs.push_back(std::move(jt));
    }
    doc["lhs"] = std::move(lhs);
    Json rhs;
    rhs["outer_coef"] = d.rhs.outer_coef.to_string();
    rhs["outer_ratio"] = d.rhs.outer_ratio.to_string();
    rhs["beta"] = d.rhs.beta.to_string();
    Json summands = Json::array();
    for (const auto& s : d.rhs.summands) {
        Json js;
        js["coef"] = s.coef.to_string();
        js["seq"] = seq_to_json(s.seq);
        js["stride"] = s.stride;
        js["offset"] = s.offset;
        summands.push_back(std::move(js));
    }
    rhs["summands"] = std::move(summands);
    doc["rhs"] = std::move(rhs);
    return doc.dump(indent);
}

/// Errors name the offending location as a JSON pointer, or a byte offset for syntax errors.
inline IdentityDescriptor from_json(std::string_view text) {
    using namespace io_detail;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        fail("", "expected a descriptor object");
    }
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
        fail("/schema_version", "missing or non-integer schema_version");
    }
    if (doc["schema_version"].get<std::int64_t>() != kSchemaVersion) {
        throw VersionError("/schema_version: unsupported schema version " + doc["schema_version"].dump() +
                           " (expected " + std::to_string(kSchemaVersion) + ")");
    }
    expect_keys(doc, "", {"schema_version", "id", "n_min", "citation", "lhs", "rhs"});

    IdentityDescriptor d;
    d.id = string_at(doc, "id", "");
    d.n_min = int_at(doc, "n_min", "");
    if (d.n_min < 0) {
        fail("/n_min", "n_min must be >= 0");
    }
    d.citation = string_at(doc, "citation", "");

    const Json& lhs = doc["lhs"];
    if (!lhs.is_array()) {
        fail("/lhs", "expected an array");
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        std::string path = "/lhs/" + std::to_string(i);
        const Json& jt = lhs[i];
        expect_keys(jt, path, {"coef", "ratio", "seq", "stride", "offset"});
        GeometricTerm t;
        t.coef = rational_at(jt, "coef", path);
        t.ratio = rational_at(jt, "ratio", path);
        if (!jt["seq"].is_null()) {
            t.seq = seq_from_json(jt["seq"], path + "/seq");
        }
        t.stride = stride_at(jt, path);
        t.offset = int_at(jt, "offset", path);
        d.lhs.push_back(std::move(t));
    }

    const Json& rhs = doc["rhs"];
    expect_keys(rhs, "/rhs", {"outer_coef", "outer_ratio", "beta", "summands"});
    d.rhs.outer_coef = rational_at(rhs, "outer_coef", "/rhs");
    d.rhs.outer_ratio = rational_at(rhs, "outer_ratio", "/rhs");
    d.rhs.beta = rational_at(rhs, "beta", "/rhs");
    const Json& summands = rhs["summands"];
    if (!summands.is_array()) {
        fail("/rhs/summands", "expected an array");
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
        std::string path = "/rhs/summands/" + std::to_string(i);
        const Json& js = summands[i];
        expect_keys(js, path, {"coef", "seq", "stride", "offset"});
        d.rhs.summands.push_back(Summand{rational_at(js, "coef", path), seq_from_json(js["seq"], path + "/seq"),
                                         stride_at(js, path), int_at(js, "offset", path)});
    }
    return d;
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

namespace latex_detail {

inline std::string frac(const Rational& q) {
    if (q.is_integer()) {
        return q.num().str();
    }
    std::string body = "\\frac{" + BigInt(abs(q.num())).str() + "}{" + q.den().str() + "}";
    return q.sign() < 0 ? "-" + body : body;
}

inline bool needs_parens(const Rational& base) { return base.sign() < 0 || !base.is_integer(); }

inline std::string base_text(const Rational& base) {
    return needs_parens(base) ? "(" + base.to_string() + ")" : base.to_string();
}

/// "2^i " for a bare base and one-character exponent, otherwise "(-2)^{i}" / "2^{n-i}".
inline std::string power(const Rational& base, const std::string& exponent) {
    if (!needs_parens(base) && exponent.size() == 1) {
        return base_text(base) + "^" + exponent + " ";
    }
    return base_text(base) + "^{" + exponent + "}";
}

inline std::string index_expr(const std::string& var, std::int64_t stride, std::int64_t offset) {
    std::string out;
    if (stride != 0) {
        out = (stride == 1) ? var : (stride == -1 ? "-" + var : std::to_string(stride) + var);
    }
    if (offset != 0 || out.empty()) {
        if (out.empty()) {
            out = std::to_string(offset);
        } else {
            out += (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
        }
    }
    return out;
}

inline std::string subscript(const std::string& symbol, const std::string& index) {
    return index.size() == 1 ? symbol + "_" + index : symbol + "_{" + index + "}";
}

/// Letters for named families (F, L, P, Q, B); generic sequences get X, Y, Z, W, ...
class Symbols {
public:
    std::string symbol_for(const SequenceDef& def) {
        static const std::pair<Family, const char*> named[] = {{Family::Fibonacci, "F"},
                                                               {Family::Lucas, "L"},
                                                               {Family::Pell, "P"},
                                                               {Family::PellLucas, "Q"},
                                                               {Family::Bronze, "B"}};
        for (const auto& [kind, letter] : named) {
            if (def.same_values(named_def(kind))) {
                return letter;
            }
        }
        for (std::size_t k = 0; k < generic_.size(); ++k) {
            if (generic_[k].same_values(def)) {
                return name_of(k);
            }
        }
        generic_.push_back(def);
        return name_of(generic_.size() - 1);
    }

    std::string comments() const {
        std::string out;
        for (std::size_t k = 0; k < generic_.size(); ++k) {
            const SequenceDef& d = generic_[k];
            std::string s = name_of(k);
            out += "% " + s + "_n = (" + d.c1().to_string() + ")" + s + "_{n-1} + (" + d.c2().to_string() + ")" + s +
                   "_{n-2}, " + s + "_0 = " + d.x0().to_string() + ", " + s + "_1 = " + d.x1().to_string() +
                   "  [" + d.label() + "]\n";
        }
        return out;
    }

private:
    static std::string name_of(std::size_t k) {
        static const char* letters[] = {"X", "Y", "Z", "W"};
        return k < 4 ? letters[k] : "X^{(" + std::to_string(k + 1) + ")}";
    }

    std::vector<SequenceDef> generic_;
};

struct Signed {
    bool negative = false;
    std::string body;
};

inline std::string coef_prefix(const Rational& magnitude, bool followed) {
    if (magnitude == Rational(1) && followed) {
        return "";
    }
    return frac(magnitude);
}

inline Signed render_lhs_term(const GeometricTerm& t, Symbols& sym) {
    std::string seq = t.seq ? subscript(sym.symbol_for(*t.seq), index_expr("n", t.stride, t.offset)) : "";
    if (t.ratio != Rational(1) && t.coef == t.ratio) {
        return {false, base_text(t.ratio) + "^{n+1}" + seq};
    }
    Signed out{t.coef.sign() < 0, ""};
    Rational magnitude = out.negative ? -t.coef : t.coef;
    bool has_power = t.ratio != Rational(1);
    std::string prefix = coef_prefix(magnitude, has_power || !seq.empty());
    std::string pow = has_power ? power(t.ratio, "n") : "";
    if (!prefix.empty() && has_power && !needs_parens(t.ratio)) {
        prefix += " \\cdot ";
    }
    out.body = prefix + pow + seq;
    if (!out.body.empty() && out.body.back() == ' ') {
        out.body.pop_back();
    }
    return out;
}

inline std::string join(const std::vector<Signed>& parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k == 0) {
            out += (parts[k].negative ? "-" : "") + parts[k].body;
        } else {
            out += (parts[k].negative ? " - " : " + ") + parts[k].body;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace latex_detail

/**
 * One display equation. Sums whose weight is t^{n-i} (beta * outer_ratio = 1)
 * are shown that way; otherwise the stored outer_ratio^n and beta^i factors
 * appear as they are. Generic sequences are listed in leading % comments.
 */
inline std::string to_latex(const IdentityDescriptor& d) {
    using namespace latex_detail;
    Symbols sym;

    std::vector<Signed> lhs_parts;
    for (const auto& t : d.lhs) {
        if (!t.coef.is_zero()) {
            lhs_parts.push_back(render_lhs_term(t, sym));
        }
    }
    std::string lhs = join(lhs_parts);

    const SumSide& r = d.rhs;
    std::string rhs;
    if (r.outer_coef == Rational(-1)) {
        rhs += "-";
    } else if (r.outer_coef != Rational(1)) {
        rhs += frac(r.outer_coef);
    }
    std::string weight;
    bool convolution = r.outer_ratio != Rational(1) && r.beta * r.outer_ratio == Rational(1);
    if (convolution) {
        weight = power(r.outer_ratio, "n-i");
    } else {
        if (r.outer_ratio != Rational(1)) {
            rhs += power(r.outer_ratio, "n");
        }
        if (r.beta != Rational(1)) {
            weight = power(r.beta, "i");
        }
    }
    std::vector<Signed> parts;
    for (const auto& s : r.summands) {
        if (s.coef.is_zero()) {
            continue;
        }
        bool negative = s.coef.sign() < 0;
        Rational magnitude = negative ? -s.coef : s.coef;
        std::string prefix = coef_prefix(magnitude, true);
        parts.push_back({negative, prefix + subscript(sym.symbol_for(s.seq), index_expr("i", s.stride, s.offset))});
    }
    std::string body = join(parts);
    if (parts.size() > 1) {
        body = "\\big(" + body + "\\big)";
    }
    rhs += "\\sum_{i=0}^n " + weight + body;

    return sym.comments() + "\\[\n" + lhs + " = " + rhs + "\n\\]\n";
}

// ---------------------------------------------------------------------------
// Plain text
// ---------------------------------------------------------------------------

namespace text_detail {

inline std::string index_text(const std::string& var, std::int64_t stride, std::int64_t offset) {
    return latex_detail::index_expr(var, stride, offset);
}

inline std::string factor(const Rational& q) { return q.is_integer() ? q.to_string() : "(" + q.to_string() + ")"; }

}  // namespace text_detail

/// Single-line ASCII rendering using sequence labels, e.g.
/// "F[n+1] = sum_{i=0..n} (-2)^(n-i) * L[i+1]".
inline std::string to_text(const IdentityDescriptor& d) {
    using text_detail::factor;
    using text_detail::index_text;
    std::string lhs;
    for (const auto& t : d.lhs) {
        if (t.coef.is_zero()) {
            continue;
        }
        std::vector<std::string> pieces;
        bool negative = t.coef.sign() < 0;
        Rational magnitude = negative ? -t.coef : t.coef;
        if (magnitude != Rational(1) || (!t.seq && t.ratio == Rational(1))) {
            pieces.push_back(factor(magnitude));
        }
        if (t.ratio != Rational(1)) {
            pieces.push_back("(" + t.ratio.to_string() + ")^n");
        }
        if (t.seq) {
            pieces.push_back(t.seq->label() + "[" + index_text("n", t.stride, t.offset) + "]");
        }
        std::string body;
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            body += (k ? " * " : "") + pieces[k];
        }
        if (lhs.empty()) {
            lhs = (negative ? "-" : "") + body;
        } else {
            lhs += (negative ? " - " : " + ") + body;
        }
    }
    if (lhs.empty()) {
        lhs = "0";
    }

    const SumSide& r = d.rhs;
    std::string rhs;
    if (r.outer_coef != Rational(1)) {
        rhs += factor(r.outer_coef) + " * ";
    }
    std::string weight;
    if (r.outer_ratio != Rational(1) && r.beta * r.outer_ratio == Rational(1)) {
        weight = "(" + r.outer_ratio.to_string() + ")^(n-i) * ";
    } else {
        if (r.outer_ratio != Rational(1)) {
            rhs += "(" + r.outer_ratio.to_string() + ")^n * ";
        }
        if (r.beta != Rational(1)) {
            weight = "(" + r.beta.to_string() + ")^i * ";
        }
    }
    std::string body;
    std::size_t shown = 0;
    for (const auto& s : r.summands) {
        if (s.coef.is_zero()) {
            continue;
        }
        std::string piece = (s.coef == Rational(1) ? "" : factor(s.coef) + " * ") + s.seq.label() + "[" +
                            index_text("i", s.stride, s.offset) + "]";
        body += (shown++ ? " + " : "") + piece;
    }
    if (shown == 0) {
        body = "0";
    } else if (shown > 1) {
        body = "(" + body + ")";
    }
    return lhs + " = " + rhs + "sum_{i=0..n} " + weight + body;
}

}  // namespace idforge
