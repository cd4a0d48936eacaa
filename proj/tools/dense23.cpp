// Command-line front end: construct points with dense times-2/times-3
// orbits, verify the cylinder chain of a run record, tabulate level
// counts b_t, and compute local-dimension lower-bound certificates.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dense23/analysis.hpp"
#include "dense23/construction.hpp"
#include "dense23/errors.hpp"
#include "dense23/run_record.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// temp file + rename, so readers never observe a partial file
void write_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GenerateOpts {
    int m = 3;
    long depth = 1;
    std::string policy = "zero";
    std::uint64_t seed = 0;
    std::string schedule = "default";
    std::string out;
};

int cmd_generate(const GenerateOpts& o) {
    dense23::Schedule schedule = dense23::schedule_from_descriptor(o.schedule, o.m);
    dense23::FreeDigitPolicy policy = dense23::policy_from_descriptor(o.policy, o.seed);
    dense23::ConstructionState state = dense23::generate_point(schedule, o.depth, policy);
    dense23::RunRecord rec = dense23::make_run_record(state, policy);
    emit(o.out, dense23::serialize_run_record(rec));
    return kExitOk;
}

struct VerifyOpts {
    std::string in;
    bool deep = false;
};

int cmd_verify(const VerifyOpts& o) {
    dense23::RunRecord rec = dense23::parse_run_record(read_file(o.in));
    dense23::VerifyReport report = dense23::verify_record(rec, o.deep);
    std::cout << report.to_json();
    if (report.ok()) return kExitOk;
    std::cerr << "verification failed: "
              << (report.details.empty() ? "unknown" : report.details.front()) << "\n";
    return kExitVerifyFailed;
}

struct CountOpts {
    int m = 3;
    std::string schedule = "default";
    long t_max = 16;
    long depth = 8;
    bool brute_force = false;
    unsigned long long cap = 1ull << 20;
    std::string out;
};

int cmd_count(const CountOpts& o) {
    dense23::Schedule schedule = dense23::schedule_from_descriptor(o.schedule, o.m);
    if (o.t_max < 1) throw std::invalid_argument("t-max must be >= 1");
    dense23::Trace trace = dense23::trace_orders(schedule, o.depth);
    if (o.t_max > trace.back().t)
        throw std::invalid_argument("t-max " + std::to_string(o.t_max) +
                                    " beyond constructed depth (t_" + std::to_string(o.depth) +
                                    " = " + std::to_string(trace.back().t) + ")");
    std::ostringstream csv;
    bool mismatch = false;
    csv << (o.brute_force ? "t,b_t,b_t_bruteforce\n" : "t,b_t\n");
    for (long t = 1; t <= o.t_max; ++t) {
        dense23::BigNat formula = dense23::count_formula(schedule, trace, t);
        csv << t << ',' << formula.to_decimal();
        if (o.brute_force) {
            dense23::BigNat brute = dense23::count_bruteforce(schedule, trace, t, o.cap);
            csv << ',' << brute.to_decimal();
            if (!(brute == formula)) mismatch = true;
        }
        csv << '\n';
    }
    emit(o.out, csv.str());
    if (mismatch) {
        std::cerr << "count mismatch between formula and brute force\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

struct DimensionOpts {
    int m = 4;
    long depth = 3;
    long t0 = 1;
    long t1 = 1;
    std::string schedule = "default";
    std::string csv;
};

int cmd_dimension(const DimensionOpts& o) {
    dense23::Schedule schedule = dense23::schedule_from_descriptor(o.schedule, o.m);
    if (o.t0 < 1 || o.t0 > o.t1) throw std::invalid_argument("need 1 <= t0 <= t1");
    dense23::Trace trace = dense23::trace_orders(schedule, o.depth);
    if (o.t1 > trace.back().t)
        throw std::invalid_argument("t1 beyond constructed depth (t_" + std::to_string(o.depth) +
                                    " = " + std::to_string(trace.back().t) + ")");
    dense23::LevelCountTable table = dense23::build_count_table(schedule, trace, o.t0, o.t1);
    dense23::Rational cert = dense23::dimension_lower_bound(table, o.t0, o.t1);
    json report{{"m", o.m},
                {"depth", o.depth},
                {"t0", o.t0},
                {"t1", o.t1},
                {"certificate", {{"num", cert.num}, {"den", cert.den}}},
                {"target", {{"num", o.m - 2}, {"den", o.m}}}};
    std::cout << report.dump(2) << "\n";
    if (!o.csv.empty()) write_atomic(o.csv, table.to_csv());
    return kExitOk;
}

struct StatsOpts {
    std::string in;
    int base = 2;
    std::string block;
    std::vector<long> checkpoints;
};

int cmd_stats(const StatsOpts& o) {
    std::string raw = read_file(o.in);
    std::string digits;
    digits.reserve(raw.size());
    for (char c : raw) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c < '0' || c >= static_cast<char>('0' + o.base))
            throw std::invalid_argument(std::string("invalid digit character '") + c +
                                        "' for base " + std::to_string(o.base));
        digits.push_back(c);
    }
    dense23::Word word(o.base, std::move(digits));
    dense23::Word block(o.base, o.block);
    std::vector<long> checkpoints = o.checkpoints;
    if (checkpoints.empty()) checkpoints.push_back(static_cast<long>(word.size()));
    json counts = json::array();
    for (long N : checkpoints) {
        dense23::BlockCount c = dense23::block_count(word, block, N);
        counts.push_back(json{{"N", c.N}, {"count", c.count}, {"window", c.window}});
    }
    json report{{"base", o.base}, {"block", o.block}, {"counts", counts}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested base-2/base-3 cylinder constructions with exact arithmetic"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* generate = app.add_subcommand("generate", "construct a point and write its run record");
    generate->add_option("--m", gen.m, "block length m (>= 2)")->required();
    generate->add_option("--depth", gen.depth, "number of construction steps K (>= 1)")->required();
    generate->add_option("--policy", gen.policy, "free digit fill: zero|one|random");
    generate->add_option("--seed", gen.seed, "seed for --policy random");
    generate->add_option("--schedule", gen.schedule, "default or test:<ell>");
    generate->add_option("--out", gen.out, "output path (stdout if omitted)");

    VerifyOpts ver;
    CLI::App* verify = app.add_subcommand("verify", "re-check the cylinder chain of a run record");
    verify->add_option("--in", ver.in, "run record path")->required();
    verify->add_flag("--deep", ver.deep, "also regenerate the run and compare");

    CountOpts cnt;
    CLI::App* count = app.add_subcommand("count", "tabulate level counts b_t as CSV");
    count->add_option("--m", cnt.m, "block length m (>= 2)")->required();
    count->add_option("--schedule", cnt.schedule, "default or test:<ell>");
    count->add_option("--t-max", cnt.t_max, "largest t to tabulate")->required();
    count->add_option("--depth", cnt.depth, "construction depth backing the table");
    count->add_flag("--brute-force", cnt.brute_force, "cross-check against exhaustive enumeration");
    count->add_option("--cap", cnt.cap, "brute-force budget (counts all 2^t prefixes)");
    count->add_option("--out", cnt.out, "output path (stdout if omitted)");

    DimensionOpts dim;
    CLI::App* dimension = app.add_subcommand("dimension", "local-dimension lower-bound certificate");
    dimension->add_option("--m", dim.m, "block length m (>= 2)")->required();
    dimension->add_option("--depth", dim.depth, "construction depth")->required();
    dimension->add_option("--t0", dim.t0, "range start")->required();
    dimension->add_option("--t1", dim.t1, "range end")->required();
    dimension->add_option("--schedule", dim.schedule, "default or test:<ell>");
    dimension->add_option("--csv", dim.csv, "write the (t, quotient) table here");

    StatsOpts st;
    CLI::App* stats = app.add_subcommand("stats", "block-occurrence counts in a digit file");
    stats->add_option("--in", st.in, "digit file (whitespace ignored)")->required();
    stats->add_option("--base", st.base, "2 or 3")->required();
    stats->add_option("--block", st.block, "digit block to count")->required();
    stats->add_option("--checkpoints", st.checkpoints, "prefix lengths N")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed() || count->parsed() || dimension->parsed()) {
            int m = generate->parsed() ? gen.m : count->parsed() ? cnt.m : dim.m;
            if (m < 2) {
                std::cerr << "m must be >= 2\n";
                return kExitUsage;
            }
        }
        if (generate->parsed()) return cmd_generate(gen);
        if (verify->parsed()) return cmd_verify(ver);
        if (count->parsed()) return cmd_count(cnt);
        if (dimension->parsed()) return cmd_dimension(dim);
        if (stats->parsed()) return cmd_stats(st);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const dense23::NotContainable& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const dense23::CapExceeded& e) {
        std::cerr << e.what() << " (required budget: " << e.required << ")\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
