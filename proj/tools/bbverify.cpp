// bbverify: runs a verification campaign over the Bernstein basis identities
// and writes a JSON or text report to stdout.
//
// Exit status: 0 all checks pass, 1 at least one check failed, 2 usage error,
// 3 internal error.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include <bbf/bbf.h>

namespace
{

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct ConfigDeleter {
    void operator()(bbf_config *c) const { bbf_config_destroy(c); }
};
struct ReportDeleter {
    void operator()(bbf_report *r) const { bbf_report_destroy(r); }
};

int status_exit(bbf_status status)
{
    std::cerr << "bbverify: " << bbf_last_error() << "\n";
    return status == BBF_ERR_INTERNAL ? exit_internal : exit_usage;
}

void list_identities()
{
    for (std::size_t i = 0; i < bbf_identity_count(); ++i) {
        std::printf("%-32s %s\n", bbf_identity_name(i), bbf_identity_summary(i));
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification campaign for Bernstein basis identities"};
    app.set_version_flag("--version", std::string(bbf_version()));

    int max_degree = 10;
    int egf_order = 24;
    std::string identities;
    int grid_margin = 1;
    std::string series_eps = "1e-9";
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string mutate;
    unsigned threads = 0;
    bool list = false;

    app.add_option("--max-degree", max_degree, "Largest degree n enumerated per identity")->capture_default_str();
    app.add_option("--egf-order", egf_order, "Truncation order of generating-function checks")->capture_default_str();
    app.add_option("--identities", identities, "Comma-separated identity names or groups (default: all)");
    app.add_option("--grid-margin", grid_margin, "Extra grid nodes per variable for grid checks")
        ->capture_default_str();
    app.add_option("--series-eps", series_eps, "Tail tolerance for series checks")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized basis checks")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)")->capture_default_str();
    app.add_flag("--list-identities", list, "Print the identity catalog and exit");
    // Hidden: injects a right-hand-side perturbation to exercise failure reporting.
    app.add_option("--mutate", mutate)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    if (list) {
        list_identities();
        return 0;
    }

    bbf_config *raw_config = nullptr;
    if (const auto s = bbf_config_create(&raw_config); s != BBF_OK) {
        return status_exit(s);
    }
    const std::unique_ptr<bbf_config, ConfigDeleter> config(raw_config);
    const bbf_format fmt = format == "text" ? BBF_FORMAT_TEXT : BBF_FORMAT_JSON;

    bbf_config *c = config.get();
    const std::function<bbf_status()> steps[] = {
        [&] { return bbf_config_set_max_degree(c, max_degree); },
        [&] { return bbf_config_set_egf_order(c, egf_order); },
        [&] { return bbf_config_set_grid_margin(c, grid_margin); },
        [&] { return bbf_config_set_series_eps(c, series_eps.c_str()); },
        [&] { return bbf_config_set_seed(c, seed); },
        [&] { return bbf_config_set_format(c, fmt); },
        [&] { return bbf_config_set_threads(c, threads); },
        [&] { return bbf_config_set_identities(c, identities.c_str()); },
        [&] { return bbf_config_set_mutate(c, mutate.empty() ? nullptr : mutate.c_str()); },
        [&] { return bbf_config_validate(c); },
    };
    for (const auto &step : steps) {
        if (const auto s = step(); s != BBF_OK) {
            return status_exit(s);
        }
    }

    bbf_report *raw_report = nullptr;
    if (const auto s = bbf_run_verify(config.get(), &raw_report); s != BBF_OK) {
        return status_exit(s);
    }
    const std::unique_ptr<bbf_report, ReportDeleter> report(raw_report);

    const char *text = nullptr;
    std::size_t length = 0;
    if (const auto s = bbf_report_render(report.get(), fmt, &text, &length); s != BBF_OK) {
        return status_exit(s);
    }
    std::fwrite(text, 1, length, stdout);
    std::fflush(stdout);
    return bbf_report_failed(report.get()) == 0 ? 0 : exit_failed;
}
