#pragma once

/**
 * @file sequences.hpp
 * @brief Bi-infinite second-order linear recurrences X_n = c1 X_{n-1} + c2 X_{n-2}.
 *
 * Because c2 != 0 the recurrence runs backwards as well,
 *   X_{n-2} = (X_n - c1 X_{n-1}) / c2,
 * so every integer index has a well-defined value.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"

namespace idforge {

/// Coefficients and initial values of one sequence; immutable once built.
class SequenceDef {
public:
    SequenceDef(Rational c1, Rational c2, Rational x0, Rational x1, std::string label = "X")
        : c1_(std::move(c1)), c2_(std::move(c2)), x0_(std::move(x0)), x1_(std::move(x1)),
          label_(std::move(label)) {
        if (c2_.is_zero()) {
            throw PreconditionError("c2 must be nonzero");
        }
    }

    const Rational& c1() const { return c1_; }
    const Rational& c2() const { return c2_; }
    const Rational& x0() const { return x0_; }
    const Rational& x1() const { return x1_; }
    const std::string& label() const { return label_; }

    SequenceDef relabeled(std::string label) const {
        SequenceDef out = *this;
        out.label_ = std::move(label);
        return out;
    }

    /// Field-for-field, label included.
    friend bool operator==(const SequenceDef&, const SequenceDef&) = default;

    /// Same recurrence and initial values, label ignored.
    bool same_values(const SequenceDef& o) const {
        return c1_ == o.c1_ && c2_ == o.c2_ && x0_ == o.x0_ && x1_ == o.x1_;
    }

private:
    Rational c1_, c2_, x0_, x1_;
    std::string label_;
};

/**
 * Memoized evaluator for one SequenceDef.
 *
 * Terms are kept in two growable runs: forward_ holds X_0, X_1, ... and
 * backward_ holds X_{-1}, X_{-2}, .... Not thread-safe; give each worker
 * its own instance.
 */
class Sequence {
public:
    explicit Sequence(SequenceDef def) : def_(std::move(def)) {
        forward_.push_back(def_.x0());
        forward_.push_back(def_.x1());
    }

    const SequenceDef& def() const { return def_; }

    Rational term(std::int64_t n) {
        if (n >= 0) {
            auto idx = static_cast<std::size_t>(n);
            while (forward_.size() <= idx) {
                std::size_t m = forward_.size();
                forward_.push_back(def_.c1() * forward_[m - 1] + def_.c2() * forward_[m - 2]);
            }
            return forward_[idx];
        }
        auto idx = static_cast<std::size_t>(-(n + 1));  // X_{-1} lives at backward_[0]
        while (backward_.size() <= idx) {
            std::size_t m = backward_.size();
            // X_{-(m+1)} = (X_{-(m-1)} - c1 X_{-m}) / c2
            const Rational& upper = (m == 0) ? forward_[1] : (m == 1 ? forward_[0] : backward_[m - 2]);
            const Rational& mid = (m == 0) ? forward_[0] : backward_[m - 1];
            backward_.push_back((upper - def_.c1() * mid) / def_.c2());
        }
        return backward_[idx];
    }

private:
    SequenceDef def_;
    std::vector<Rational> forward_;
    std::vector<Rational> backward_;
};

/// Uncached single evaluation.
inline Rational term(const SequenceDef& def, std::int64_t n) {
    Sequence seq(def);
    return seq.term(n);
}

enum class Family { Fibonacci, Lucas, Pell, PellLucas, Bronze, A015530, GeneralizedU, GeneralizedV };

struct NamedFamily {
    Family kind;
    Rational a{0};  // GeneralizedU / GeneralizedV only
    Rational b{0};

    static NamedFamily generalized_u(Rational a, Rational b) {
        return {Family::GeneralizedU, std::move(a), std::move(b)};
    }
    static NamedFamily generalized_v(Rational a, Rational b) {
        return {Family::GeneralizedV, std::move(a), std::move(b)};
    }
};

inline SequenceDef named_def(const NamedFamily& f) {
    switch (f.kind) {
        case Family::Fibonacci: return {1, 1, 0, 1, "F"};
        case Family::Lucas: return {1, 1, 2, 1, "L"};
        case Family::Pell: return {2, 1, 0, 1, "P"};
        case Family::PellLucas: return {2, 1, 1, 1, "Q"};
        case Family::Bronze: return {3, 1, 0, 1, "B"};
        case Family::A015530: return {4, 3, 0, 1, "a"};
        case Family::GeneralizedU:
        case Family::GeneralizedV:
            if (f.b.is_zero()) {
                throw PreconditionError("generalized family needs b != 0 (c2 must be nonzero)");
            }
            if (f.kind == Family::GeneralizedU) {
                return {f.a, f.b, 0, 1, "U(" + f.a.to_string() + "," + f.b.to_string() + ")"};
            }
            return {f.a, f.b, 2, f.a, "V(" + f.a.to_string() + "," + f.b.to_string() + ")"};
    }
    throw UsageError("unknown family");
}

inline SequenceDef named_def(Family kind) { return named_def(NamedFamily{kind}); }

struct FamilyName {
    std::string_view name;
    Family kind;
};

inline constexpr FamilyName kFamilyNames[] = {
    {"fibonacci", Family::Fibonacci}, {"lucas", Family::Lucas},   {"pell", Family::Pell},
    {"pelllucas", Family::PellLucas}, {"bronze", Family::Bronze}, {"a015530", Family::A015530},
};

/// Case-insensitive lookup of the six fixed families.
inline Family family_from_name(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (const auto& entry : kFamilyNames) {
        if (entry.name == lowered) {
            return entry.kind;
        }
    }
    throw UsageError("unknown family '" + std::string(name) +
                     "' (expected fibonacci, lucas, pell, pelllucas, bronze or a015530)");
}

/// V_j of the (c1, c2) recurrence with V_0 = 2, V_1 = c1.
inline Rational generalized_v(const Rational& c1, const Rational& c2, std::int64_t j) {
    if (j < 0) {
        throw PreconditionError("generalized_v needs j >= 0");
    }
    return term(SequenceDef(c1, c2, 2, c1), j);
}

/// The U-sequence (0, 1, ...) of the (c1, c2) recurrence, named when it is a known family.
inline SequenceDef fundamental_def(const Rational& c1, const Rational& c2) {
    for (Family kind : {Family::Fibonacci, Family::Pell, Family::Bronze, Family::A015530}) {
        SequenceDef known = named_def(kind);
        if (known.c1() == c1 && known.c2() == c2) {
            return known;
        }
    }
    return named_def(NamedFamily::generalized_u(c1, c2));
}

/**
 * Y_n = X_{jn+k} as a sequence in its own right: Y satisfies the recurrence
 * with c1' = V_j and c2' = -(-c2)^j.
 */
inline SequenceDef subsequence_def(const SequenceDef& def, std::int64_t j, std::int64_t k) {
    if (j < 1) {
        throw PreconditionError("subsequence step j must be >= 1");
    }
    if (j == 1 && k == 0) {
        return def;
    }
    Sequence seq(def);
    std::string label = def.label() + "[" + std::to_string(j) + "n" +
                        (k < 0 ? "-" + std::to_string(-k) : "+" + std::to_string(k)) + "]";
    return {generalized_v(def.c1(), def.c2(), j), -rat_pow(-def.c2(), j), seq.term(k),
            seq.term(j + k), std::move(label)};
}

}  // namespace idforge
