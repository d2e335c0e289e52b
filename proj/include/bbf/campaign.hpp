#ifndef BBF_CAMPAIGN_HPP
#define BBF_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <bbf/rational.hpp>
#include <bbf/report.hpp>
#include <bbf/series.hpp>

namespace bbf
{

inline constexpr int report_schema = 1;
std::string_view version();

enum class ReportFormat { json, text };

// Configuration errors are reported as UsageError so front ends can map them
// to their own exit status.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct VerifyConfig {
    int max_degree = 10;
    int egf_order = 24;
    // Empty means every catalog entry.
    std::set<IdentityId> identities;
    int grid_margin = 1;
    Rational series_eps = Rational(1, 1'000'000'000);
    ReportFormat format = ReportFormat::json;
    std::uint64_t seed = 0;
    std::optional<IdentityId> mutate;
    // Worker threads; 0 picks the hardware concurrency. Not echoed.
    unsigned threads = 0;

    // Throws UsageError.
    void validate() const;
};

// Accepts catalog names and group prefixes ("verify_subdivision" selects every
// "verify_subdivision.*" entry). Throws UsageError for unknown names.
std::set<IdentityId> parse_identity_selection(std::string_view comma_list);

using CheckResult = std::variant<IdentityReport, SeriesCheck>;

IdentityId result_id(const CheckResult &r);
bool result_passed(const CheckResult &r);

struct CampaignReport {
    VerifyConfig config;
    std::vector<CheckResult> results{};
    std::size_t passed = 0;
    std::size_t failed = 0;
    double wall_time_seconds = 0.0;

    std::size_t total() const noexcept { return results.size(); }
    bool all_passed() const noexcept { return failed == 0; }
};

// Enumerates every admissible parameter tuple of the selected identities up to
// max_degree, runs the checks, and returns them sorted by catalog order then
// parameters. The result does not depend on the thread count.
CampaignReport run_verify(const VerifyConfig &config);

// json: schema-versioned, stable field order, rationals as "p/q".
// text: one header line, one line per check, two summary lines.
std::string emit_report(const CampaignReport &report, ReportFormat format);

} // namespace bbf

#endif
