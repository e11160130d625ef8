#pragma once

/**
 * @file engine.hpp
 * @brief Identities as data, generated from the two weighted-sum theorems.
 *
 * An IdentityDescriptor asserts, for every n >= n_min,
 *
 *   sum_t coef_t * ratio_t^n * X_t(stride_t * n + offset_t)
 *       = outer_coef * outer_ratio^n * sum_{i=0..n} beta^i * sum_m coef_m * Y_m(stride_m * i + offset_m)
 *
 * A weight t^{n-i} is stored as outer_ratio = t, beta = 1/t.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"
#include "idforge/sequences.hpp"

namespace idforge {

/// coef * ratio^n * seq(stride * n + offset), or coef * ratio^n when seq is empty.
struct GeometricTerm {
    Rational coef{1};
    Rational ratio{1};
    std::optional<SequenceDef> seq;
    std::int64_t stride = 1;
    std::int64_t offset = 0;

    static GeometricTerm constant(Rational coef, Rational ratio = 1) {
        return {std::move(coef), std::move(ratio), std::nullopt, 0, 0};
    }

    friend bool operator==(const GeometricTerm&, const GeometricTerm&) = default;
};

struct Summand {
    Rational coef{1};
    SequenceDef seq;
    std::int64_t stride = 1;
    std::int64_t offset = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
};

struct SumSide {
    Rational outer_coef{1};
    Rational outer_ratio{1};
    Rational beta{1};
    std::vector<Summand> summands;

    friend bool operator==(const SumSide&, const SumSide&) = default;
};

struct IdentityDescriptor {
    std::string id;
    std::vector<GeometricTerm> lhs;
    SumSide rhs;
    std::int64_t n_min = 0;
    std::string citation;

    friend bool operator==(const IdentityDescriptor&, const IdentityDescriptor&) = default;
};

struct SidePair {
    Rational lhs;
    Rational rhs;

    bool equal() const { return lhs == rhs; }
    friend bool operator==(const SidePair&, const SidePair&) = default;
};

/// Throws PreconditionError on negative strides or n_min.
inline void validate(const IdentityDescriptor& d) {
    if (d.n_min < 0) {
        throw PreconditionError("n_min must be >= 0");
    }
    for (const auto& t : d.lhs) {
        if (t.stride < 0) {
            throw PreconditionError("stride must be >= 0");
        }
    }
    for (const auto& s : d.rhs.summands) {
        if (s.stride < 0) {
            throw PreconditionError("stride must be >= 0");
        }
    }
}

/**
 * Evaluates both sides of one descriptor, sharing a term cache per distinct
 * sequence. Owns its caches, so one instance per thread.
 */
class DescriptorEvaluator {
public:
    explicit DescriptorEvaluator(IdentityDescriptor d) : d_(std::move(d)) {
        validate(d_);
        for (const auto& t : d_.lhs) {
            lhs_slots_.push_back(t.seq ? std::optional<std::size_t>(slot_for(*t.seq)) : std::nullopt);
        }
        for (const auto& s : d_.rhs.summands) {
            rhs_slots_.push_back(slot_for(s.seq));
        }
    }

    const IdentityDescriptor& descriptor() const { return d_; }

    Rational lhs(std::int64_t n) {
        Rational total;
        for (std::size_t t = 0; t < d_.lhs.size(); ++t) {
            const GeometricTerm& term = d_.lhs[t];
            if (term.coef.is_zero()) {
                continue;
            }
            Rational value = term.coef * rat_pow(term.ratio, n);
            if (lhs_slots_[t]) {
                value *= pool_[*lhs_slots_[t]].term(term.stride * n + term.offset);
            }
            total += value;
        }
        return total;
    }

    /// sum_m coef_m * Y_m(stride_m * i + offset_m), without the beta^i weight.
    Rational summand(std::int64_t i) {
        Rational total;
        for (std::size_t m = 0; m < d_.rhs.summands.size(); ++m) {
            const Summand& s = d_.rhs.summands[m];
            if (s.coef.is_zero()) {
                continue;
            }
            total += s.coef * pool_[rhs_slots_[m]].term(s.stride * i + s.offset);
        }
        return total;
    }

    /// Inner sum recomputed from i = 0.
    Rational inner_sum(std::int64_t n) {
        Rational sum;
        Rational weight(1);
        for (std::int64_t i = 0; i <= n; ++i) {
            sum += weight * summand(i);
            weight *= d_.rhs.beta;
        }
        return sum;
    }

    Rational rhs_from_inner(std::int64_t n, const Rational& inner) const {
        return d_.rhs.outer_coef * rat_pow(d_.rhs.outer_ratio, n) * inner;
    }

    Rational rhs(std::int64_t n) { return rhs_from_inner(n, inner_sum(n)); }

private:
    std::size_t slot_for(const SequenceDef& def) {
        for (std::size_t k = 0; k < pool_.size(); ++k) {
            if (pool_[k].def() == def) {
                return k;
            }
        }
        pool_.emplace_back(def);
        return pool_.size() - 1;
    }

    IdentityDescriptor d_;
    std::vector<Sequence> pool_;
    std::vector<std::optional<std::size_t>> lhs_slots_;
    std::vector<std::size_t> rhs_slots_;
};

/// Both sides at n, the sum computed term by term.
inline SidePair descriptor_eval(const IdentityDescriptor& d, std::int64_t n) {
    if (n < d.n_min) {
        throw RangeError("n = " + std::to_string(n) + " is below n_min = " + std::to_string(d.n_min));
    }
    DescriptorEvaluator ev(d);
    return {ev.lhs(n), ev.rhs(n)};
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/**
 * For A_0 = 1 and t = c1 - A_1 != 0:
 *   A_{n+2} - A_1 A_{n+1} = (A_2 - A_1^2) * sum_{i=0..n} t^{n-i} A_i.
 */
inline IdentityDescriptor theorem1_descriptor(const SequenceDef& a) {
    if (a.x0() != Rational(1)) {
        throw PreconditionError("normalized theorem needs A_0 = 1, got A_0 = " + a.x0().to_string());
    }
    Rational t = a.c1() - a.x1();
    if (t.is_zero()) {
        throw DegenerateRatioError("t = c1 - A_1 = 0; the normalized theorem requires t != 0");
    }
    Rational a2 = term(a, 2);
    IdentityDescriptor d;
    d.id = "thm1[" + a.label() + "]";
    d.citation = "normalized weighted-sum theorem (A_0 = 1, t = c1 - A_1)";
    d.lhs = {GeometricTerm{1, 1, a, 1, 2}, GeometricTerm{-a.x1(), 1, a, 1, 1}};
    d.rhs.outer_coef = a2 - a.x1() * a.x1();
    d.rhs.outer_ratio = t;
    d.rhs.beta = t.reciprocal();
    d.rhs.summands = {Summand{1, a, 1, 0}};
    return d;
}

/// t = -c2 X_{k-1} / X_k, the weight ratio of the offset-k identity.
inline Rational theorem2_ratio(const SequenceDef& x, std::int64_t k) {
    Sequence seq(x);
    Rational xk = seq.term(k);
    Rational xk1 = seq.term(k - 1);
    if (xk.is_zero()) {
        throw OffsetInvalidError("offset k = " + std::to_string(k) +
                                 " invalid: X_k = 0 (X_k and X_{k-1} must both be nonzero)");
    }
    if (xk1.is_zero()) {
        throw OffsetInvalidError("offset k = " + std::to_string(k) +
                                 " invalid: X_{k-1} = 0 (X_k and X_{k-1} must both be nonzero)");
    }
    return -x.c2() * xk1 / xk;
}

/**
 * For X_k, X_{k-1} != 0:
 *   X_0 X_{n+2} - X_1 X_{n+1} = ((X_0 X_2 - X_1^2) / X_k) * sum_{i=0..n} t^{n-i} X_{i+k}
 * with t = -c2 X_{k-1} / X_k. k may be negative.
 */
inline IdentityDescriptor theorem2_descriptor(const SequenceDef& x, std::int64_t k) {
    Rational t = theorem2_ratio(x, k);
    Sequence seq(x);
    Rational xk = seq.term(k);
    IdentityDescriptor d;
    d.id = "thm2[" + x.label() + ",k=" + std::to_string(k) + "]";
    d.citation = "weighted-sum theorem with offset k (X_k, X_{k-1} nonzero)";
    d.lhs = {GeometricTerm{x.x0(), 1, x, 1, 2}, GeometricTerm{-x.x1(), 1, x, 1, 1}};
    d.rhs.outer_coef = (x.x0() * seq.term(2) - x.x1() * x.x1()) / xk;
    d.rhs.outer_ratio = t;
    d.rhs.beta = t.reciprocal();
    d.rhs.summands = {Summand{1, x, 1, k}};
    return d;
}

/**
 * The offset-k identity divided through by D = X_0 X_2 - X_1^2.
 *
 * W_n = X_0 X_{n+2} - X_1 X_{n+1} obeys the same recurrence with W_{-1} = 0
 * and W_0 = D, so W_n = D * U_{n+1} where U is the (c1, c2) sequence starting
 * 0, 1. This leaves U_{n+1} = (1/X_k) * sum t^{n-i} X_{i+k}.
 */
inline IdentityDescriptor theorem2_reduced_descriptor(const SequenceDef& x, std::int64_t k) {
    IdentityDescriptor d = theorem2_descriptor(x, k);
    Rational discriminant = x.x0() * term(x, 2) - x.x1() * x.x1();
    if (discriminant.is_zero()) {
        throw PreconditionError("X_0 X_2 - X_1^2 = 0: both sides vanish identically, nothing to reduce");
    }
    d.id += "/reduced";
    d.lhs = {GeometricTerm{1, 1, fundamental_def(x.c1(), x.c2()), 1, 1}};
    d.rhs.outer_coef = d.rhs.outer_coef / discriminant;
    return d;
}

/// Multiplies both sides by sigma * lambda^n.
inline IdentityDescriptor rewrite_scale(const IdentityDescriptor& d, const Rational& sigma,
                                        const Rational& lambda) {
    if (sigma.is_zero() || lambda.is_zero()) {
        throw PreconditionError("rewrite_scale needs nonzero sigma and lambda");
    }
    IdentityDescriptor out = d;
    for (auto& t : out.lhs) {
        t.coef *= sigma;
        t.ratio *= lambda;
    }
    out.rhs.outer_coef *= sigma;
    out.rhs.outer_ratio *= lambda;
    return out;
}

// ---------------------------------------------------------------------------
// Product identities
// ---------------------------------------------------------------------------

inline Rational sign_pow(std::int64_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

/// lhs = X_{n+k+2} X_k - X_{k+1} X_{n+k+1}; rhs = (-c2)^k (X_{n+2} X_0 - X_{n+1} X_1).
inline SidePair docagne_general(const SequenceDef& x, std::int64_t k, std::int64_t n) {
    Sequence s(x);
    Rational lhs = s.term(n + k + 2) * s.term(k) - s.term(k + 1) * s.term(n + k + 1);
    Rational rhs = rat_pow(-x.c2(), k) * (s.term(n + 2) * s.term(0) - s.term(n + 1) * s.term(1));
    return {std::move(lhs), std::move(rhs)};
}

/// lhs = X_{k+2} X_k - X_{k+1}^2; rhs = (-c2)^k (X_2 X_0 - X_1^2).
inline SidePair cassini_general(const SequenceDef& x, std::int64_t k) {
    Sequence s(x);
    Rational next = s.term(k + 1);
    Rational lhs = s.term(k + 2) * s.term(k) - next * next;
    Rational x1 = s.term(1);
    Rational rhs = rat_pow(-x.c2(), k) * (s.term(2) * s.term(0) - x1 * x1);
    return {std::move(lhs), std::move(rhs)};
}

inline constexpr std::string_view kClassicalNames[] = {"ruggles",     "lucas_add",       "koshy55",
                                                       "catalan_fib", "lucas_fib_mixed", "lucas_lucas"};

/**
 * Both sides of a classical Fibonacci/Lucas product identity.
 *
 *   ruggles(a,b)          F_{a+b} = L_b F_a + (-1)^{b+1} F_{a-b}
 *   lucas_add(a,b)        L_{a+b} = L_b L_a + (-1)^{b+1} L_{a-b}
 *   koshy55(j,n)          L_{j(n+2)} = 5 F_j F_{j(n+1)} - (-1)^{j+1} L_{jn}
 *   catalan_fib(a,b,c)    F_{a+c} F_{b-c} - F_a F_b = (-1)^{b+c+1} F_{a+c-b} F_c
 *   lucas_fib_mixed(a,b,c) L_{a+c} F_{b-c} - L_a F_b = (-1)^{b+c+1} L_{a+c-b} F_c
 *   lucas_lucas(a,b,c)    L_{a+c} L_{b-c} - L_a L_b = 5 (-1)^{b+c} F_{a+c-b} F_c
 */
inline SidePair classical_eval(std::string_view name, std::span<const std::int64_t> params) {
    auto need = [&](std::size_t arity) {
        if (params.size() != arity) {
            throw UsageError(std::string(name) + " takes " + std::to_string(arity) + " parameters, got " +
                             std::to_string(params.size()));
        }
    };
    Sequence fib(named_def(Family::Fibonacci));
    Sequence luc(named_def(Family::Lucas));
    auto F = [&](std::int64_t i) { return fib.term(i); };
    auto L = [&](std::int64_t i) { return luc.term(i); };

    if (name == "ruggles" || name == "lucas_add") {
        need(2);
        std::int64_t a = params[0], b = params[1];
        if (name == "ruggles") {
            return {F(a + b), L(b) * F(a) + sign_pow(b + 1) * F(a - b)};
        }
        return {L(a + b), L(b) * L(a) + sign_pow(b + 1) * L(a - b)};
    }
    if (name == "koshy55") {
        need(2);
        std::int64_t j = params[0], n = params[1];
        return {L(j * (n + 2)), Rational(5) * F(j) * F(j * (n + 1)) - sign_pow(j + 1) * L(j * n)};
    }
    if (name == "catalan_fib" || name == "lucas_fib_mixed" || name == "lucas_lucas") {
        need(3);
        std::int64_t a = params[0], b = params[1], c = params[2];
        if (name == "catalan_fib") {
            return {F(a + c) * F(b - c) - F(a) * F(b), sign_pow(b + c + 1) * F(a + c - b) * F(c)};
        }
        if (name == "lucas_fib_mixed") {
            return {L(a + c) * F(b - c) - L(a) * F(b), sign_pow(b + c + 1) * L(a + c - b) * F(c)};
        }
        return {L(a + c) * L(b - c) - L(a) * L(b), Rational(5) * sign_pow(b + c) * F(a + c - b) * F(c)};
    }
    throw UsageError("unknown classical identity '" + std::string(name) + "'");
}

}  // namespace idforge
