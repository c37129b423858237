// lockcalc command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lockcalc/lockcalc.h"

namespace {

constexpr int kExitConfigError = 2;

struct SessionDeleter {
    void operator()(lkc_session* s) const { lkc_session_destroy(s); }
};
struct BufferDeleter {
    void operator()(lkc_buffer* b) const { lkc_buffer_destroy(b); }
};
using SessionPtr = std::unique_ptr<lkc_session, SessionDeleter>;
using BufferPtr = std::unique_ptr<lkc_buffer, BufferDeleter>;

struct Options {
    std::string config;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> samples;
};

int report(lkc_status status, const char* context) {
    std::cerr << "lockcalc: " << context << ": " << lkc_status_string(status);
    const std::string detail = lkc_last_error_message();
    if (!detail.empty()) std::cerr << ": " << detail;
    std::cerr << "\n";
    return kExitConfigError;
}

int run(const std::string& subcommand, const Options& opt) {
    lkc_session* raw = nullptr;
    lkc_status st = opt.config.empty() ? lkc_session_create_default(&raw)
                                       : lkc_session_create_from_file(opt.config.c_str(), &raw);
    if (st != LKC_OK) return report(st, opt.config.empty() ? "defaults" : opt.config.c_str());
    SessionPtr session(raw);

    if (opt.seed && (st = lkc_session_set_seed(session.get(), *opt.seed)) != LKC_OK) return report(st, "--seed");
    if (opt.samples && (st = lkc_session_set_samples(session.get(), *opt.samples)) != LKC_OK)
        return report(st, "--samples");

    lkc_format format = LKC_FORMAT_TABLE;
    st = opt.format.empty() ? lkc_session_format(session.get(), &format)
                            : lkc_parse_format(opt.format.c_str(), &format);
    if (st != LKC_OK) return report(st, "--format");

    lkc_buffer* out_raw = nullptr;
    int exit_code = 0;
    st = lkc_run(session.get(), subcommand.c_str(), format, &out_raw, &exit_code);
    if (st != LKC_OK) return report(st, subcommand.c_str());
    BufferPtr out(out_raw);

    if (opt.out.empty()) {
        std::fwrite(lkc_buffer_data(out.get()), 1, lkc_buffer_size(out.get()), stdout);
        std::fflush(stdout);
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        file.write(lkc_buffer_data(out.get()), static_cast<std::streamsize>(lkc_buffer_size(out.get())));
        if (!file) {
            std::cerr << "lockcalc: cannot write '" << opt.out << "'\n";
            return kExitConfigError;
        }
    }
    if (exit_code != 0) std::cerr << "lockcalc: " << subcommand << ": one or more checks failed\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lockdown cost-benefit calculator: scenarios, QALY costing, end-state option values"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lkc_version()));

    Options opt;
    std::string chosen;
    const std::pair<const char*, const char*> commands[] = {
        {"project", "weekly death trajectories for each scenario"},
        {"compare", "quarterly ease-vs-lockdown comparison"},
        {"consistency", "search for weekly-vs-block decision inconsistencies"},
        {"endstate", "Monte Carlo valuation of epidemic end states"},
        {"finalsize", "herd-immunity threshold, final size and overshoot"},
        {"sweep", "quarterly comparison over a parameter grid"},
        {"paper-check", "replay the published figures and property suites"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "JSON configuration file (defaults when omitted)");
        sub->add_option("--out", opt.out, "write output to this file instead of stdout");
        sub->add_option("--format", opt.format, "csv, table or svg")->check(CLI::IsMember({"csv", "table", "svg"}));
        sub->add_option("--seed", opt.seed, "64-bit Monte Carlo seed");
        sub->add_option("--samples", opt.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
        sub->callback([&chosen, name = std::string(name)] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }
    return run(chosen, opt);
}
