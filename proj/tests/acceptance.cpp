// Acceptance checks: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <fstream>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "idforge/catalog.hpp"
#include "idforge/engine.hpp"
#include "idforge/io.hpp"
#include "idforge/oeis.hpp"
#include "idforge/verifier.hpp"

using namespace idforge;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool same_values(const IdentityDescriptor& a, const IdentityDescriptor& b, std::int64_t n_hi) {
    for (std::int64_t n = 0; n <= n_hi; ++n) {
        SidePair pa = descriptor_eval(a, n);
        SidePair pb = descriptor_eval(b, n);
        if (pa.lhs != pb.lhs || pa.rhs != pb.rhs) {
            return false;
        }
    }
    return true;
}

bool spot(const IdentityDescriptor& d, std::int64_t n, const Rational& value) {
    SidePair p = descriptor_eval(d, n);
    return p.lhs == value && p.rhs == value;
}

Outcome catalog_sweep() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    auto reports = verify_catalog(64, std::max(1U, std::thread::hardware_concurrency()));
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ReportSummary s = summarize(reports);
    o.require(reports.size() >= 60, "fewer than 60 entries");
    o.require(s.failed == 0 && s.skipped == 0, std::to_string(s.failed) + " entries failed");
    o.require(seconds < 30.0, "sweep took " + std::to_string(seconds) + " s");
    o.require(spot(entry("eq1").descriptor, 2, 16), "eq1 at n=2");
    o.require(spot(entry("eq8", {{"m", 9}}).descriptor, 1, -49062), "eq8(m=9) at n=1");
    o.require(spot(entry("eq23", {{"j", 2}}).descriptor, 2, 30), "eq23(j=2) at n=2");
    o.require(spot(entry("eq12", {{"j", 3}}).descriptor, 1, 360), "eq12(j=3) at n=1");
    std::ostringstream d;
    d << reports.size() << " entries on [0,64] in " << std::fixed << std::setprecision(2) << seconds << " s";
    if (o.ok) {
        o.detail = d.str();
    }
    return o;
}

Outcome fuzz(bool theorem1) {
    Outcome o;
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.instance_count = theorem1 ? 300 : 500;
    cfg.jobs = std::max(1U, std::thread::hardware_concurrency());
    auto reports = theorem1 ? fuzz_theorem1(cfg) : fuzz_theorem2(cfg);
    ReportSummary s = summarize(reports);
    o.require(reports.size() == cfg.instance_count, "wrong instance count");
    o.require(s.failed == 0, std::to_string(s.failed) + " failures");
    if (o.ok) {
        o.detail = std::to_string(s.passed) + " passed, " + std::to_string(s.skipped) + " skipped (seed 1)";
    }
    return o;
}

Outcome matrix_oracle() {
    Outcome o;
    std::mt19937_64 rng(17);
    std::vector<Rational> pool = default_coefficient_pool();
    auto any = [&] { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
    int checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Rational c2;
        do {
            c2 = any();
        } while (c2.is_zero());
        SequenceDef x(any(), c2, any(), any());
        Sequence s(x);
        Mat2 c = Mat2::companion(x.c1(), x.c2());
        for (int k = -8; k <= 8; ++k) {
            Mat2 ck = mat2_pow(c, k);
            for (int n = 0; n <= 8; ++n) {
                Mat2 base{s.term(n + 2), s.term(1), s.term(n + 1), s.term(0)};
                Rational oracle = mat2_det(ck) * mat2_det(base);
                SidePair p = docagne_general(x, k, n);
                o.require(p.lhs == oracle && p.rhs == oracle && mat2_det(ck * base) == oracle,
                          "d'Ocagne mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n));
                ++checks;
            }
            SidePair cas = cassini_general(x, k);
            SidePair doc = docagne_general(x, k, 0);
            o.require(cas.lhs == doc.lhs && cas.rhs == doc.rhs, "Cassini differs from d'Ocagne at n=0");
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checks) + " exact comparisons";
    }
    return o;
}

Outcome classical() {
    Outcome o;
    long checks = 0;
    for (std::int64_t a = -6; a <= 10; ++a) {
        for (std::int64_t b = -6; b <= 10; ++b) {
            std::array<std::int64_t, 2> ab{a, b};
            for (auto name : {"ruggles", "lucas_add"}) {
                SidePair p = classical_eval(name, ab);
                o.require(p.lhs == p.rhs, std::string(name) + " failed");
                ++checks;
            }
            for (std::int64_t c = -6; c <= 10; ++c) {
                std::array<std::int64_t, 3> abc{a, b, c};
                for (auto name : {"catalan_fib", "lucas_fib_mixed", "lucas_lucas"}) {
                    SidePair p = classical_eval(name, abc);
                    o.require(p.lhs == p.rhs, std::string(name) + " failed");
                    ++checks;
                }
            }
        }
    }
    for (std::int64_t j = 1; j <= 8; ++j) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            std::array<std::int64_t, 2> jn{j, n};
            SidePair p = classical_eval("koshy55", jn);
            o.require(p.lhs == p.rhs, "koshy55 failed");
            ++checks;
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checks) + " evaluations";
    }
    return o;
}

Outcome derivation() {
    Outcome o;
    IdentityDescriptor raw = rewrite_scale(theorem2_descriptor(named_def(Family::Lucas), 1), Rational(1, 5), 1);
    o.require(same_values(raw, entry("eq3").descriptor, 32), "theorem2(Lucas,1)/5 differs from eq3");
    IdentityDescriptor eq5 = rewrite_scale(entry("eq5", {{"t", Rational(-1, 2)}}).descriptor, -2, 1);
    o.require(same_values(eq5, entry("eq2").descriptor, 32), "-2 * eq5(t=-1/2) differs from eq2");
    if (o.ok) {
        o.detail = "eq3 and eq2 reproduced on [0,32]";
    }
    return o;
}

Outcome negative_indices() {
    Outcome o;
    Sequence f(named_def(Family::Fibonacci));
    Sequence l(named_def(Family::Lucas));
    for (int n = 0; n <= 50; ++n) {
        Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        o.require(f.term(-n) == -sign * f.term(n), "F_{-n} law at n=" + std::to_string(n));
        o.require(l.term(-n) == sign * l.term(n), "L_{-n} law at n=" + std::to_string(n));
    }
    o.require(term(named_def(Family::Pell), -1) == Rational(1), "P_{-1} != 1");
    if (o.ok) {
        o.detail = "n in [0,50], P_{-1} = 1";
    }
    return o;
}

Outcome serialization() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& e : all_entries()) {
        o.require(from_json(to_json(e.descriptor)) == e.descriptor, "round trip failed for " + e.id);
        ++count;
    }
    FuzzConfig cfg;
    cfg.seed = 1;
    cfg.instance_count = 400;
    std::size_t fuzzed = 0;
    for (const auto& inst : theorem2_instances(cfg)) {
        if (fuzzed == 100) {
            break;
        }
        if (term(inst.def, inst.k).is_zero() || term(inst.def, inst.k - 1).is_zero()) {
            continue;
        }
        IdentityDescriptor d = theorem2_descriptor(inst.def, inst.k);
        o.require(from_json(to_json(d)) == d, "round trip failed for " + inst.id);
        ++fuzzed;
    }
    o.require(fuzzed == 100, "not enough fuzz descriptors");
    if (o.ok) {
        o.detail = std::to_string(count) + " catalog + " + std::to_string(fuzzed) + " fuzz descriptors";
    }
    return o;
}

Outcome oeis_fixtures() {
    Outcome o;
    std::size_t min_terms = SIZE_MAX;
    for (const auto& f : kOeisFamilies) {
        std::ifstream in(std::string(IDFORGE_FIXTURES_DIR) + "/" + std::string(f.a_number) + ".txt");
        if (!in) {
            o.require(false, "missing fixture " + std::string(f.a_number));
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        BFile b = parse_bfile(buf.str());
        o.require(b.values.size() >= 30, std::string(f.a_number) + " has fewer than 30 terms");
        OeisComparison c = compare_with_bfile(named_def(f.kind), b, std::min<std::size_t>(b.values.size(), 100));
        o.require(!c.first_mismatch, std::string(f.a_number) + " mismatch");
        min_terms = std::min(min_terms, c.compared);
    }
    if (o.ok) {
        o.detail = "6 families, at least " + std::to_string(min_terms) + " terms each";
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"catalog sweep", catalog_sweep},
        {"offset-k theorem fuzz", [] { return fuzz(false); }},
        {"normalized theorem fuzz", [] { return fuzz(true); }},
        {"d'Ocagne and Cassini vs companion matrix", matrix_oracle},
        {"classical identities", classical},
        {"derivation equivalence", derivation},
        {"negative-index laws", negative_indices},
        {"JSON round trip", serialization},
        {"OEIS fixtures offline", oeis_fixtures},
    };
    int failures = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << number << ". " << c.name << ": " << o.detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
