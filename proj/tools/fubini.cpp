// fubini: compute the sequences, inspect their EGFs, sweep the identities and
// cross-check against OEIS b-files.
//
// Exit codes: 0 success / all pass, 1 identity or crosscheck failure,
//             2 usage error, 3 environment error (offline, I/O, transport).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fubini/bfile.hpp"
#include "fubini/fetch.hpp"
#include "fubini/generating_functions.hpp"
#include "fubini/identities.hpp"
#include "fubini/oeis.hpp"
#include "fubini/sequences.hpp"

namespace {

using namespace fubini;

enum ExitCode : int { ok = 0, identity_failure = 1, usage_error = 2, environment_error = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string env_or(const char* name, std::string fallback) {
    const char* value = std::getenv(name);
    return (value && *value) ? std::string(value) : std::move(fallback);
}

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("FUBINI_CACHE_DIR"); dir && *dir) {
        return dir;
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "fubini";
    }
    return ".fubini-cache";
}

void print_table(const SequenceTable& table, const std::string& format) {
    if (format == "structured") {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : table.values) {
            values.push_back(v.str());
        }
        std::cout << nlohmann::json{{"name", table.name}, {"offset", table.offset}, {"values", values}}.dump()
                  << '\n';
    } else {
        // plain and bfile share the "n value" layout
        std::cout << emit_bfile(table);
    }
}

// compute

struct ComputeOptions {
    std::string sequence;
    std::size_t max = 0;
    std::string format = "plain";
};

int run_compute(const ComputeOptions& opt) {
    const auto positive = [&](auto fn, const char* name) {
        if (opt.max < 1) {
            throw UsageError(std::string("compute ") + name + " needs --max >= 1");
        }
        return positive_index_table(name, opt.max, fn);
    };

    SequenceTable table;
    if (opt.sequence == "bell") {
        table = ordered_bell_table(opt.max);
    } else if (opt.sequence == "stirling-row") {
        table = stirling_row_table(opt.max);
    } else if (opt.sequence == "worpitzky-row") {
        table = worpitzky_row_table(opt.max);
    } else if (opt.sequence == "h") {
        table = positive([](std::size_t n) { return h_total(n); }, "h");
    } else if (opt.sequence == "he") {
        table = positive([](std::size_t n) { return h_even(n); }, "he");
    } else {
        table = positive([](std::size_t n) { return h_odd(n); }, "ho");
    }
    print_table(table, opt.format);
    return ok;
}

// verify

struct VerifyOptions {
    std::string target;
    std::size_t max = 200;
    std::size_t order = 64;
    std::string format = "plain";
};

int run_verify(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    if (opt.target == "all") {
        reports = verify_all(opt.max, opt.order);
    } else if (opt.target == "thm1") {
        reports = verify_theorem1(opt.max);
    } else if (opt.target == "thm2") {
        reports = {verify_theorem2(opt.max)};
    } else if (opt.target == "known") {
        reports = verify_known_sums(opt.max);
    } else if (opt.target == "parity") {
        reports = {verify_parity_split(opt.max), verify_worpitzky(opt.max)};
    } else {
        reports = verify_gf_agreement(opt.order);
    }

    if (opt.format == "structured") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) {
            out.push_back(to_json(r));
        }
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            std::cout << to_line(r) << '\n';
        }
    }
    return all_passed(reports) ? ok : identity_failure;
}

// egf

struct EgfOptions {
    std::string gf;
    std::size_t order = 0;
    std::optional<std::size_t> k;
};

int run_egf(const EgfOptions& opt) {
    if ((opt.gf == "stirling-col") != opt.k.has_value()) {
        throw UsageError(opt.k ? "--k applies only to stirling-col" : "stirling-col requires --k");
    }
    TruncatedSeries series;
    if (opt.gf == "bell") {
        series = gf_bell(opt.order);
    } else if (opt.gf == "stirling-col") {
        series = gf_stirling_col(*opt.k, opt.order);
    } else if (opt.gf == "H") {
        series = gf_H(opt.order);
    } else if (opt.gf == "G") {
        series = gf_G(opt.order);
    } else if (opt.gf == "He") {
        series = gf_He(opt.order);
    } else {
        series = gf_Ho(opt.order);
    }

    // "n coefficient" plus n! * coefficient when that is an integer
    Integer fact = 1;
    for (std::size_t n = 0; n <= series.order(); ++n) {
        if (n > 0) {
            fact *= n;
        }
        const Rational scaled = series[n] * fact;
        std::cout << n << ' ' << to_string(series[n]);
        if (boost::multiprecision::denominator(scaled) == 1) {
            std::cout << ' ' << boost::multiprecision::numerator(scaled);
        }
        std::cout << '\n';
    }
    return ok;
}

// bfile

struct BFileOptions {
    std::string action;
    std::string id;
    std::optional<std::int64_t> limit;
    bool network = false;
    std::string cache_dir;
    std::string fixture_dir;
};

int run_bfile(const BFileOptions& opt) {
    if (!is_valid_sequence_id(opt.id)) {
        throw UsageError("invalid OEIS id '" + opt.id + "' (expected A + 6 digits)");
    }
    FetchConfig fetch_config;
    fetch_config.network = opt.network;
    fetch_config.cache_dir = opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir);

    if (opt.action == "fetch") {
        const BFile file = fetch_bfile(opt.id, fetch_config);
        std::cout << "fetched " << opt.id << ": " << file.entries.size() << " entries -> "
                  << (fetch_config.cache_dir / oeis::bfile_name(opt.id)).string() << '\n';
        return ok;
    }

    if (!oeis::is_known(opt.id)) {
        throw UsageError("no computable sequence for " + opt.id);
    }

    if (opt.action == "export") {
        std::cout << emit_bfile(oeis::table(opt.id, opt.limit.value_or(20)));
        return ok;
    }

    // check: bundled fixture by default, live b-file when --network is given
    BFile reference;
    if (opt.network) {
        reference = fetch_bfile(opt.id, fetch_config);
    } else {
        const std::filesystem::path dir = opt.fixture_dir.empty()
                                              ? std::filesystem::path(env_or("FUBINI_FIXTURE_DIR", FUBINI_FIXTURE_DIR))
                                              : std::filesystem::path(opt.fixture_dir);
        reference = oeis::load_fixture(dir, opt.id);
    }
    if (reference.entries.empty()) {
        throw std::runtime_error("b-file for " + opt.id + " has no entries");
    }
    const std::int64_t limit = std::min(opt.limit.value_or(reference.entries.back().index),
                                        reference.entries.back().index);
    const VerificationReport report = crosscheck(oeis::table(opt.id, limit), reference, limit);
    std::cout << to_line(report) << '\n';
    return report.passed() ? ok : identity_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stirling numbers, ordered Bell numbers and their parity sums, computed exactly"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Print a sequence as \"n value\" lines");
    compute_cmd->add_option("sequence", compute.sequence, "Sequence to compute")
        ->required()
        ->check(CLI::IsMember({"bell", "stirling-row", "h", "he", "ho", "worpitzky-row"}));
    compute_cmd->add_option("--max,-n", compute.max, "Largest n (row index for *-row sequences)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--format", compute.format, "Output format")
        ->check(CLI::IsMember({"plain", "bfile", "structured"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep identities, one report line each");
    verify_cmd->add_option("target", verify.target, "Identity group")
        ->required()
        ->check(CLI::IsMember({"all", "thm1", "thm2", "known", "parity", "gf"}));
    verify_cmd->add_option("--max,-n", verify.max, "Largest n for direct sweeps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--order", verify.order, "Truncation order for EGF checks")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", verify.format, "Output format")
        ->check(CLI::IsMember({"plain", "structured"}));

    EgfOptions egf;
    auto* egf_cmd = app.add_subcommand("egf", "Print EGF coefficients as \"n coeff [n!*coeff]\"");
    egf_cmd->add_option("gf", egf.gf, "Generating function")
        ->required()
        ->check(CLI::IsMember({"bell", "stirling-col", "H", "G", "He", "Ho"}));
    egf_cmd->add_option("--order", egf.order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
    egf_cmd->add_option("--k", egf.k, "Column index for stirling-col")->check(CLI::NonNegativeNumber);

    BFileOptions bfile;
    auto* bfile_cmd = app.add_subcommand("bfile", "OEIS b-file check / export / fetch");
    bfile_cmd->add_option("action", bfile.action, "What to do")
        ->required()
        ->check(CLI::IsMember({"check", "export", "fetch"}));
    bfile_cmd->add_option("id", bfile.id, "Sequence id, e.g. A000670")->required();
    bfile_cmd->add_option("--limit", bfile.limit, "Largest index to check or export")->check(CLI::NonNegativeNumber);
    bfile_cmd->add_flag("--network", bfile.network, "Allow HTTPS access to oeis.org")->envname("FUBINI_NETWORK");
    bfile_cmd->add_option("--cache-dir", bfile.cache_dir, "Where fetched b-files are stored");
    bfile_cmd->add_option("--fixture-dir", bfile.fixture_dir, "Directory holding bundled b-files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage_error;
    }

    try {
        if (*compute_cmd) {
            return run_compute(compute);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
        if (*egf_cmd) {
            return run_egf(egf);
        }
        return run_bfile(bfile);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return usage_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        // offline, transport, file I/O, malformed fixture
        std::cerr << "error: " << e.what() << '\n';
        return environment_error;
    }
}
