// identity_forge: evaluate recurrences, generate and verify weighted-sum identities,
// fuzz the two theorems, and cross-check the named families against OEIS b-files.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or hypothesis error,
// 3 external resource error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"

#include "idforge/catalog.hpp"
#include "idforge/engine.hpp"
#include "idforge/errors.hpp"
#include "idforge/io.hpp"
#include "idforge/numeric.hpp"
#include "idforge/oeis.hpp"
#include "idforge/sequences.hpp"
#include "idforge/verifier.hpp"

namespace fs = std::filesystem;
using namespace idforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExternal = 3;

class ExternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DefOptions {
    std::string family;
    std::string c1, c2, x0, x1;
    std::string label = "X";

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "fibonacci, lucas, pell, pelllucas, bronze or a015530");
        cmd->add_option("--c1", c1, "recurrence coefficient c1 (p/q)");
        cmd->add_option("--c2", c2, "recurrence coefficient c2 (p/q, nonzero)");
        cmd->add_option("--x0", x0, "initial value X_0 (p/q)");
        cmd->add_option("--x1", x1, "initial value X_1 (p/q)");
        cmd->add_option("--label", label, "label for a custom sequence");
    }

    SequenceDef build() const {
        bool custom = !c1.empty() || !c2.empty() || !x0.empty() || !x1.empty();
        if (!family.empty()) {
            if (custom) {
                throw UsageError("give either --family or --c1/--c2/--x0/--x1, not both");
            }
            return named_def(family_from_name(family));
        }
        if (c1.empty() || c2.empty() || x0.empty() || x1.empty()) {
            throw UsageError("a sequence needs --family or all of --c1 --c2 --x0 --x1");
        }
        return {Rational::parse(c1), Rational::parse(c2), Rational::parse(x0), Rational::parse(x1), label};
    }
};

Params parse_params(const std::vector<std::string>& raw) {
    Params out;
    for (const auto& p : raw) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--param expects name=value, got '" + p + "'");
        }
        out[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
    }
    return out;
}

// Accepts a family id with --param values, or a full instance id such as "eq8[m=9]".
IdentityDescriptor catalog_descriptor(const std::string& id, const std::vector<std::string>& raw_params) {
    if (id.find('[') != std::string::npos) {
        if (!raw_params.empty()) {
            throw UsageError("--param cannot be combined with an instance id");
        }
        for (const auto& e : all_entries()) {
            if (e.id == id) {
                return e.descriptor;
            }
        }
        throw UsageError("unknown catalog instance '" + id + "'");
    }
    return entry(id, parse_params(raw_params)).descriptor;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ExternalError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------

struct SeqEvalCmd {
    DefOptions def;
    std::int64_t n = 0;

    int run() const {
        std::cout << term(def.build(), n) << "\n";
        return kExitOk;
    }
};

struct GenerateCmd {
    DefOptions def;
    std::optional<std::int64_t> k;
    bool theorem1 = false;
    bool reduced = false;
    bool json = false;
    bool latex = false;

    int run() const {
        SequenceDef x = def.build();
        if (theorem1 == k.has_value()) {
            throw UsageError("generate needs exactly one of --k or --theorem1");
        }
        IdentityDescriptor d;
        std::vector<std::string> summary;
        if (theorem1) {
            if (reduced) {
                throw UsageError("--reduced applies to the offset-k form only");
            }
            d = theorem1_descriptor(x);
            summary.push_back("t = " + d.rhs.outer_ratio.to_string());
            summary.push_back("coefficient = " + d.rhs.outer_coef.to_string());
        } else {
            d = theorem2_descriptor(x, *k);
            Rational xk = term(x, *k);
            Rational disc = x.x0() * term(x, 2) - x.x1() * x.x1();
            summary.push_back("t = " + d.rhs.outer_ratio.to_string());
            summary.push_back("coefficient = " + d.rhs.outer_coef.to_string());
            if (!disc.is_zero()) {
                summary.push_back("reduced coefficient = " + xk.reciprocal().to_string() + " (divided by X_0 X_2 - X_1^2 = " +
                                  disc.to_string() + ")");
            } else {
                summary.push_back("X_0 X_2 - X_1^2 = 0: both sides vanish identically");
            }
            if (reduced) {
                d = theorem2_reduced_descriptor(x, *k);
            }
        }
        if (json) {
            std::cout << to_json(d, 2) << "\n";
        }
        if (latex) {
            std::cout << to_latex(d);
        }
        if (!json && !latex) {
            std::cout << "identity: " << d.id << "\n";
            for (const auto& line : summary) {
                std::cout << line << "\n";
            }
            std::cout << to_text(d) << "\n";
        }
        return kExitOk;
    }
};

struct VerifyCmd {
    std::string id;
    std::vector<std::string> params;
    std::string json_path;
    std::optional<std::int64_t> n_min;
    std::int64_t n_max = 32;

    int run() const {
        if (id.empty() == json_path.empty()) {
            throw UsageError("verify needs exactly one of --id or --json");
        }
        IdentityDescriptor d = json_path.empty() ? catalog_descriptor(id, params) : from_json(read_file(json_path));
        VerificationReport r = verify(d, n_min.value_or(d.n_min), n_max);
        std::cout << to_string(r) << "\n";
        return r.passed() ? kExitOk : kExitFail;
    }
};

struct CatalogListCmd {
    int run() const {
        for (const auto& e : all_entries()) {
            std::cout << e.id << "\t" << e.citation << "\n";
        }
        return kExitOk;
    }
};

struct CatalogVerifyAllCmd {
    std::int64_t n_max = 64;
    unsigned jobs = 1;
    bool timing = false;

    int run() const {
        auto reports = verify_catalog(n_max, jobs);
        for (const auto& r : reports) {
            std::cout << to_string(r, timing) << "\n";
        }
        ReportSummary s = summarize(reports);
        std::cout << reports.size() << " entries: " << s.passed << " passed, " << s.failed << " failed, "
                  << s.skipped << " skipped\n";
        return s.failed == 0 ? kExitOk : kExitFail;
    }
};

struct CatalogShowCmd {
    std::string id;
    std::vector<std::string> params;
    bool json = false;
    bool latex = false;

    int run() const {
        IdentityDescriptor d = catalog_descriptor(id, params);
        if (json) {
            std::cout << to_json(d, 2) << "\n";
        }
        if (latex) {
            std::cout << to_latex(d);
        }
        if (!json && !latex) {
            std::cout << d.id << "\n" << d.citation << "\n" << to_text(d) << "\n";
        }
        return kExitOk;
    }
};

struct FuzzCmd {
    std::optional<std::uint64_t> seed;
    std::size_t count = 500;
    std::size_t theorem1_count = 300;
    std::int64_t n_max = 32;
    unsigned jobs = 1;
    bool verbose = false;

    int run() const {
        FuzzConfig cfg;
        cfg.seed = seed ? *seed : std::random_device{}();
        cfg.n_hi = n_max;
        cfg.jobs = jobs;
        std::cout << "seed " << cfg.seed << "\n";
        bool ok = true;
        auto section = [&](const char* name, std::size_t instances, auto fuzz) {
            FuzzConfig c = cfg;
            c.instance_count = instances;
            auto reports = fuzz(c);
            for (const auto& r : reports) {
                if (verbose || r.failed()) {
                    std::cout << to_string(r) << "\n";
                }
            }
            ReportSummary s = summarize(reports);
            std::cout << name << ": " << reports.size() << " instances, " << s.passed << " passed, " << s.failed
                      << " failed, " << s.skipped << " skipped\n";
            ok = ok && s.failed == 0;
        };
        section("theorem2", count, [](const FuzzConfig& c) { return fuzz_theorem2(c); });
        section("theorem1", theorem1_count, [](const FuzzConfig& c) { return fuzz_theorem1(c); });
        return ok ? kExitOk : kExitFail;
    }
};

struct OeisCheckCmd {
    std::string family;
    std::size_t count = 40;
    bool offline = false;
    std::string fixtures = "./fixtures";

    static std::optional<std::string> fetch(const std::string& a_number) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
        httplib::SSLClient client("oeis.org", 443);
        client.set_connection_timeout(10);
        client.set_read_timeout(20);
        client.set_follow_location(true);
        std::string path = "/" + a_number + "/b" + a_number.substr(1) + ".txt";
        auto res = client.Get(path);
        if (!res) {
            std::cerr << "fetch failed: " << httplib::to_string(res.error()) << "\n";
            return std::nullopt;
        }
        if (res->status != 200) {
            std::cerr << "fetch failed: HTTP " << res->status << "\n";
            return std::nullopt;
        }
        return res->body;
#else
        (void)a_number;
        std::cerr << "fetch failed: built without TLS support\n";
        return std::nullopt;
#endif
    }

    int run() const {
        Family kind = family_from_name(family);
        std::string a_number(oeis_id(kind));
        if (count == 0) {
            std::cout << a_number << " " << family << ": 0 terms compared, vacuous pass\n";
            return kExitOk;
        }
        const char* env = std::getenv("IDENTITY_FORGE_OFFLINE");
        bool use_network = !offline && !(env != nullptr && std::string(env) == "1");
        fs::path fixture = fs::path(fixtures) / (a_number + ".txt");

        std::string text;
        std::string source;
        std::optional<std::string> live = use_network ? fetch(a_number) : std::nullopt;
        if (live) {
            text = *live;
            source = "live";
            std::error_code ec;
            fs::create_directories(fixtures, ec);
            std::ofstream(fixture, std::ios::binary) << text;
        } else {
            if (!fs::exists(fixture)) {
                throw ExternalError("no fixture at " + fixture.string() +
                                    (use_network ? " and the live fetch failed" : " (offline)"));
            }
            text = read_file(fixture.string());
            source = "fixture " + fixture.string();
        }

        BFile bfile = parse_bfile(text);
        OeisComparison cmp;
        try {
            cmp = compare_with_bfile(named_def(kind), bfile, count);
        } catch (const RangeError& e) {
            throw ExternalError(a_number + ": " + e.what());
        }
        if (cmp.first_mismatch) {
            std::cout << a_number << " " << family << ": mismatch at index " << *cmp.first_mismatch << ": b-file has "
                      << cmp.expected << ", recurrence gives " << cmp.actual << "\n";
            return kExitFail;
        }
        std::cout << a_number << " " << family << ": " << cmp.compared << " terms match (" << source << ")\n";
        std::cout << "terms:";
        for (std::size_t i = 0; i < cmp.compared; ++i) {
            std::cout << " " << bfile.values[i];
        }
        std::cout << "\n";
        return kExitOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation, generation and verification of weighted-sum recurrence identities"};
    app.require_subcommand(1);

    SeqEvalCmd seq_eval;
    auto* seq_cmd = app.add_subcommand("seq-eval", "Print X_n for a sequence at any integer index");
    seq_eval.def.attach(seq_cmd);
    seq_cmd->add_option("--n", seq_eval.n, "index (negative allowed)")->required();

    GenerateCmd generate;
    auto* gen_cmd = app.add_subcommand("generate", "Build the weighted-sum identity for a sequence");
    generate.def.attach(gen_cmd);
    gen_cmd->add_option("--k", generate.k, "offset k for the general theorem");
    gen_cmd->add_flag("--theorem1", generate.theorem1, "use the normalized theorem (needs X_0 = 1)");
    gen_cmd->add_flag("--reduced", generate.reduced, "divide through by X_0 X_2 - X_1^2");
    gen_cmd->add_flag("--json", generate.json, "print the descriptor as JSON");
    gen_cmd->add_flag("--latex", generate.latex, "print the identity as LaTeX");

    VerifyCmd verify_cmd;
    auto* ver_cmd = app.add_subcommand("verify", "Check one identity exactly over a range of n");
    ver_cmd->add_option("--id", verify_cmd.id, "catalog id, e.g. eq8 or eq8[m=9]");
    ver_cmd->add_option("--param", verify_cmd.params, "catalog parameter name=value (repeatable)");
    ver_cmd->add_option("--json", verify_cmd.json_path, "descriptor JSON file");
    ver_cmd->add_option("--n-min", verify_cmd.n_min, "first n (default: the descriptor's n_min)");
    ver_cmd->add_option("--n-max", verify_cmd.n_max, "last n")->capture_default_str();

    auto* cat_cmd = app.add_subcommand("catalog", "Built-in identities");
    cat_cmd->require_subcommand(1);
    CatalogListCmd cat_list;
    auto* list_cmd = cat_cmd->add_subcommand("list", "List every catalog entry");
    CatalogVerifyAllCmd cat_verify;
    auto* va_cmd = cat_cmd->add_subcommand("verify-all", "Verify every catalog entry");
    va_cmd->add_option("--n-max", cat_verify.n_max, "last n")->capture_default_str();
    va_cmd->add_option("--jobs", cat_verify.jobs, "worker threads")->capture_default_str();
    va_cmd->add_flag("--timing", cat_verify.timing, "append per-entry timings");
    CatalogShowCmd cat_show;
    auto* show_cmd = cat_cmd->add_subcommand("show", "Render one entry as text, JSON or LaTeX");
    show_cmd->add_option("--id", cat_show.id, "catalog id")->required();
    show_cmd->add_option("--param", cat_show.params, "catalog parameter name=value (repeatable)");
    show_cmd->add_flag("--json", cat_show.json, "print JSON");
    show_cmd->add_flag("--latex", cat_show.latex, "print LaTeX");

    FuzzCmd fuzz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded random checks of both theorems");
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed (random and printed when omitted)");
    fuzz_cmd->add_option("--count", fuzz.count, "offset-k theorem instances")->capture_default_str();
    fuzz_cmd->add_option("--theorem1-count", fuzz.theorem1_count, "normalized theorem instances")
        ->capture_default_str();
    fuzz_cmd->add_option("--n-max", fuzz.n_max, "last n checked per instance")->capture_default_str();
    fuzz_cmd->add_option("--jobs", fuzz.jobs, "worker threads")->capture_default_str();
    fuzz_cmd->add_flag("--verbose", fuzz.verbose, "print every report");

    OeisCheckCmd oeis;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare a family with its OEIS b-file");
    oeis_cmd->add_option("--family", oeis.family, "family name")->required();
    oeis_cmd->add_option("--count", oeis.count, "terms to compare")->capture_default_str();
    oeis_cmd->add_flag("--offline", oeis.offline, "use bundled fixtures only");
    oeis_cmd->add_option("--fixtures", oeis.fixtures, "fixtures directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seq_cmd) return seq_eval.run();
        if (*gen_cmd) return generate.run();
        if (*ver_cmd) return verify_cmd.run();
        if (*list_cmd) return cat_list.run();
        if (*va_cmd) return cat_verify.run();
        if (*show_cmd) return cat_show.run();
        if (*fuzz_cmd) return fuzz.run();
        if (*oeis_cmd) return oeis.run();
    } catch (const ExternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
