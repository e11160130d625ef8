#pragma once

/**
 * @file verifier.hpp
 * @brief Exact range verification, catalog sweeps and seeded theorem fuzzing.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "idforge/catalog.hpp"
#include "idforge/engine.hpp"
#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"
#include "idforge/sequences.hpp"

namespace idforge {

enum class Status { Pass, Fail, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

struct Counterexample {
    std::int64_t n;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    std::string id;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    Status status = Status::Pass;
    std::string skip_reason;
    std::optional<Counterexample> first_failure;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

/// One line per report; timing is left out unless asked for so output is reproducible.
inline std::string to_string(const VerificationReport& r, bool with_timing = false) {
    std::string out = r.id + " [" + std::to_string(r.n_lo) + ".." + std::to_string(r.n_hi) + "] " +
                      status_name(r.status);
    if (r.status == Status::Skipped) {
        out += " (" + r.skip_reason + ")";
    }
    if (r.first_failure) {
        out += " first counterexample n=" + std::to_string(r.first_failure->n) +
               " lhs=" + r.first_failure->lhs.to_string() + " rhs=" + r.first_failure->rhs.to_string();
    }
    if (with_timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
        out += " (" + std::to_string(us) + " us)";
    }
    return out;
}

/**
 * Right-hand side values for consecutive n, reusing the running inner sum:
 * S_{n+1} = S_n + beta^{n+1} * summand(n+1).
 */
class IncrementalRhs {
public:
    IncrementalRhs(DescriptorEvaluator& ev, std::int64_t n_start)
        : ev_(ev), n_(n_start), inner_(ev.inner_sum(n_start)),
          next_weight_(rat_pow(ev.descriptor().rhs.beta, n_start + 1)),
          outer_pow_(rat_pow(ev.descriptor().rhs.outer_ratio, n_start)) {}

    std::int64_t n() const { return n_; }

    Rational value() const { return ev_.descriptor().rhs.outer_coef * outer_pow_ * inner_; }

    void advance() {
        ++n_;
        inner_ += next_weight_ * ev_.summand(n_);
        next_weight_ *= ev_.descriptor().rhs.beta;
        outer_pow_ *= ev_.descriptor().rhs.outer_ratio;
    }

private:
    DescriptorEvaluator& ev_;
    std::int64_t n_;
    Rational inner_;
    Rational next_weight_;
    Rational outer_pow_;
};

inline VerificationReport skipped_report(std::string id, std::int64_t n_lo, std::int64_t n_hi, std::string reason) {
    VerificationReport r;
    r.id = std::move(id);
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.status = Status::Skipped;
    r.skip_reason = std::move(reason);
    return r;
}

/// Checks LHS(n) = RHS(n) exactly for n in [n_lo, n_hi]; stops at the first counterexample.
inline VerificationReport verify(const IdentityDescriptor& d, std::int64_t n_lo, std::int64_t n_hi) {
    if (n_lo < d.n_min || n_lo > n_hi) {
        throw UsageError("bad verification range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) +
                         "] for n_min = " + std::to_string(d.n_min));
    }
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.id = d.id;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    DescriptorEvaluator ev(d);
    IncrementalRhs rhs(ev, n_lo);
    for (std::int64_t n = n_lo;; ++n) {
        Rational left = ev.lhs(n);
        Rational right = rhs.value();
        if (left != right) {
            report.status = Status::Fail;
            report.first_failure = Counterexample{n, std::move(left), std::move(right)};
            break;
        }
        if (n == n_hi) {
            break;
        }
        rhs.advance();
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// Applies fn to every index in [0, count) on up to `jobs` threads; results keep input order.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
    std::vector<std::optional<Result>> slots(count);
    unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            slots[i].emplace(fn(i));
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        slots[i].emplace(fn(i));
                    } catch (...) {
                        if (!failed.exchange(true)) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

inline std::vector<VerificationReport> verify_catalog(std::int64_t n_hi, unsigned jobs = 1) {
    if (n_hi < 0) {
        throw UsageError("n_hi must be >= 0");
    }
    std::vector<CatalogEntry> entries = all_entries();
    return parallel_map<VerificationReport>(entries.size(), jobs, [&](std::size_t i) {
        return verify(entries[i].descriptor, entries[i].descriptor.n_min, n_hi);
    });
}

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

/// p/q with p in [-3, 3] and q in [1, 3], deduplicated and sorted.
inline std::vector<Rational> default_coefficient_pool() {
    std::vector<Rational> pool;
    for (int q = 1; q <= 3; ++q) {
        for (int p = -3; p <= 3; ++p) {
            Rational v(p, q);
            if (std::find(pool.begin(), pool.end(), v) == pool.end()) {
                pool.push_back(v);
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

struct FuzzConfig {
    std::uint64_t seed = 1;
    std::size_t instance_count = 500;
    std::vector<Rational> coefficient_pool = default_coefficient_pool();
    std::int64_t k_lo = -4;
    std::int64_t k_hi = 5;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 32;
    unsigned jobs = 1;
};

struct FuzzInstance {
    std::string id;
    SequenceDef def;
    std::int64_t k = 0;
};

namespace fuzz_detail {

inline std::string describe(const SequenceDef& d) {
    return "c1=" + d.c1().to_string() + " c2=" + d.c2().to_string() + " x0=" + d.x0().to_string() +
           " x1=" + d.x1().to_string();
}

class Drawer {
public:
    explicit Drawer(const FuzzConfig& cfg) : rng_(cfg.seed), pool_(cfg.coefficient_pool) {
        if (pool_.empty()) {
            throw UsageError("coefficient pool is empty");
        }
        for (const auto& v : pool_) {
            if (!v.is_zero()) {
                nonzero_.push_back(v);
            }
        }
        if (nonzero_.empty()) {
            throw UsageError("coefficient pool has no nonzero value for c2");
        }
    }

    const Rational& any() { return pick(pool_); }
    const Rational& nonzero() { return pick(nonzero_); }

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

private:
    const Rational& pick(const std::vector<Rational>& from) {
        return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng_)];
    }

    std::mt19937_64 rng_;
    std::vector<Rational> pool_;
    std::vector<Rational> nonzero_;
};

}  // namespace fuzz_detail

/// The deterministic instance stream behind fuzz_theorem2.
inline std::vector<FuzzInstance> theorem2_instances(const FuzzConfig& cfg) {
    if (cfg.k_lo > cfg.k_hi) {
        throw UsageError("empty k range");
    }
    fuzz_detail::Drawer draw(cfg);
    std::vector<FuzzInstance> out;
    for (std::size_t i = 0; i < cfg.instance_count; ++i) {
        Rational c1 = draw.any();
        Rational c2 = draw.nonzero();
        Rational x0 = draw.any();
        Rational x1 = draw.any();
        std::int64_t k = draw.between(cfg.k_lo, cfg.k_hi);
        SequenceDef def(c1, c2, x0, x1, "X");
        out.push_back({"thm2#" + std::to_string(i) + " (" + fuzz_detail::describe(def) + " k=" + std::to_string(k) + ")",
                       std::move(def), k});
    }
    return out;
}

/// The deterministic instance stream behind fuzz_theorem1 (x0 forced to 1).
inline std::vector<FuzzInstance> theorem1_instances(const FuzzConfig& cfg) {
    fuzz_detail::Drawer draw(cfg);
    std::vector<FuzzInstance> out;
    for (std::size_t i = 0; i < cfg.instance_count; ++i) {
        Rational c1 = draw.any();
        Rational c2 = draw.nonzero();
        Rational x1 = draw.any();
        SequenceDef def(c1, c2, 1, x1, "A");
        out.push_back({"thm1#" + std::to_string(i) + " (" + fuzz_detail::describe(def) + ")", std::move(def), 0});
    }
    return out;
}

/// Verifies one offset-theorem instance, or reports which hypothesis fails.
inline VerificationReport check_theorem2_instance(const std::string& id, const SequenceDef& def, std::int64_t k,
                                                  std::int64_t n_lo, std::int64_t n_hi) {
    Sequence seq(def);
    std::string reason;
    if (seq.term(k).is_zero()) {
        reason = "X_k=0";
    } else if (seq.term(k - 1).is_zero()) {
        reason = "X_{k-1}=0";
    }
    if (!reason.empty()) {
        return skipped_report(id, n_lo, n_hi, reason);
    }
    IdentityDescriptor d = theorem2_descriptor(def, k);
    d.id = id;
    return verify(d, n_lo, n_hi);
}

inline VerificationReport check_theorem1_instance(const std::string& id, const SequenceDef& def,
                                                  std::int64_t n_lo, std::int64_t n_hi) {
    if (def.x0() != Rational(1)) {
        return skipped_report(id, n_lo, n_hi, "A_0!=1");
    }
    if (def.c1() == def.x1()) {
        return skipped_report(id, n_lo, n_hi, "t=0");
    }
    IdentityDescriptor d = theorem1_descriptor(def);
    d.id = id;
    return verify(d, n_lo, n_hi);
}

inline std::vector<VerificationReport> fuzz_theorem2(const FuzzConfig& cfg) {
    std::vector<FuzzInstance> instances = theorem2_instances(cfg);
    return parallel_map<VerificationReport>(instances.size(), cfg.jobs, [&](std::size_t i) {
        return check_theorem2_instance(instances[i].id, instances[i].def, instances[i].k, cfg.n_lo, cfg.n_hi);
    });
}

inline std::vector<VerificationReport> fuzz_theorem1(const FuzzConfig& cfg) {
    std::vector<FuzzInstance> instances = theorem1_instances(cfg);
    return parallel_map<VerificationReport>(instances.size(), cfg.jobs, [&](std::size_t i) {
        return check_theorem1_instance(instances[i].id, instances[i].def, cfg.n_lo, cfg.n_hi);
    });
}

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

inline ReportSummary summarize(const std::vector<VerificationReport>& reports) {
    ReportSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::Pass: ++s.passed; break;
            case Status::Fail: ++s.failed; break;
            case Status::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace idforge
