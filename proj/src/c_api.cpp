#include <bbf/bbf.h>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include <bbf/basis.hpp>
#include <bbf/campaign.hpp>
#include <bbf/egf.hpp>

struct bbf_config {
    bbf::VerifyConfig config;
};

struct bbf_report {
    bbf::CampaignReport report;
    std::string rendered;
};

namespace
{

thread_local std::string last_error;

bbf_status fail(bbf_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template <typename F>
bbf_status guarded(F &&body)
{
    last_error.clear();
    try {
        body();
        return BBF_OK;
    } catch (const std::domain_error &e) {
        return fail(BBF_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(BBF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(BBF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(BBF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BBF_ERR_INTERNAL, "unknown error");
    }
}

char *dup_string(const std::string &s)
{
    auto *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char *bbf_version(void)
{
    return bbf::version().data();
}

int bbf_schema_version(void)
{
    return bbf::report_schema;
}

const char *bbf_last_error(void)
{
    return last_error.c_str();
}

size_t bbf_identity_count(void)
{
    return bbf::identity_catalog().size();
}

const char *bbf_identity_name(size_t index)
{
    const auto catalog = bbf::identity_catalog();
    return index < catalog.size() ? catalog[index].name.data() : nullptr;
}

const char *bbf_identity_summary(size_t index)
{
    const auto catalog = bbf::identity_catalog();
    return index < catalog.size() ? catalog[index].summary.data() : nullptr;
}

bbf_status bbf_config_create(bbf_config **out)
{
    if (out == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null output pointer");
    }
    return guarded([&] { *out = new bbf_config{}; });
}

void bbf_config_destroy(bbf_config *config)
{
    delete config;
}

bbf_status bbf_config_set_max_degree(bbf_config *config, int max_degree)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (max_degree < 0) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "max_degree must be >= 0");
    }
    config->config.max_degree = max_degree;
    return BBF_OK;
}

bbf_status bbf_config_set_egf_order(bbf_config *config, int egf_order)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (egf_order < 0) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "egf_order must be >= 0");
    }
    config->config.egf_order = egf_order;
    return BBF_OK;
}

bbf_status bbf_config_set_grid_margin(bbf_config *config, int grid_margin)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (grid_margin < 0) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "grid_margin must be >= 0");
    }
    config->config.grid_margin = grid_margin;
    return BBF_OK;
}

bbf_status bbf_config_set_series_eps(bbf_config *config, const char *eps)
{
    if (config == nullptr || eps == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const auto value = bbf::Rational::parse(eps);
        if (value <= bbf::Rational(0)) {
            throw std::invalid_argument("series_eps must be > 0");
        }
        config->config.series_eps = value;
    });
}

bbf_status bbf_config_set_seed(bbf_config *config, uint64_t seed)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    config->config.seed = seed;
    return BBF_OK;
}

bbf_status bbf_config_set_format(bbf_config *config, bbf_format format)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (format != BBF_FORMAT_JSON && format != BBF_FORMAT_TEXT) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "unknown format");
    }
    config->config.format = format == BBF_FORMAT_JSON ? bbf::ReportFormat::json : bbf::ReportFormat::text;
    return BBF_OK;
}

bbf_status bbf_config_set_identities(bbf_config *config, const char *comma_list)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (comma_list == nullptr) {
        config->config.identities.clear();
        return BBF_OK;
    }
    try {
        config->config.identities = bbf::parse_identity_selection(comma_list);
    } catch (const bbf::UsageError &e) {
        return fail(BBF_ERR_UNKNOWN_IDENTITY, e.what());
    }
    return BBF_OK;
}

bbf_status bbf_config_set_mutate(bbf_config *config, const char *identity)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    if (identity == nullptr) {
        config->config.mutate.reset();
        return BBF_OK;
    }
    const auto id = bbf::identity_from_string(identity);
    if (!id) {
        return fail(BBF_ERR_UNKNOWN_IDENTITY, std::string("unknown identity '") + identity + "'");
    }
    config->config.mutate = *id;
    return BBF_OK;
}

bbf_status bbf_config_set_threads(bbf_config *config, unsigned threads)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    config->config.threads = threads;
    return BBF_OK;
}

bbf_status bbf_config_validate(const bbf_config *config)
{
    if (config == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null config");
    }
    return guarded([&] { config->config.validate(); });
}

bbf_status bbf_run_verify(const bbf_config *config, bbf_report **out)
{
    if (config == nullptr || out == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] { *out = new bbf_report{bbf::run_verify(config->config), {}}; });
}

void bbf_report_destroy(bbf_report *report)
{
    delete report;
}

size_t bbf_report_total(const bbf_report *report)
{
    return report != nullptr ? report->report.total() : 0;
}

size_t bbf_report_passed(const bbf_report *report)
{
    return report != nullptr ? report->report.passed : 0;
}

size_t bbf_report_failed(const bbf_report *report)
{
    return report != nullptr ? report->report.failed : 0;
}

bbf_status bbf_report_render(bbf_report *report, bbf_format format, const char **text, size_t *length)
{
    if (report == nullptr || text == nullptr) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (format != BBF_FORMAT_JSON && format != BBF_FORMAT_TEXT) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "unknown format");
    }
    return guarded([&] {
        report->rendered = bbf::emit_report(
            report->report, format == BBF_FORMAT_JSON ? bbf::ReportFormat::json : bbf::ReportFormat::text);
        *text = report->rendered.c_str();
        if (length != nullptr) {
            *length = report->rendered.size();
        }
    });
}

bbf_status bbf_check_functional_equation(const char *identity, const char *const *param_names,
                                         const long *param_values, size_t param_count, int order, int *passed)
{
    if (identity == nullptr || passed == nullptr || (param_count > 0 && (param_names == nullptr || param_values == nullptr))) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null argument");
    }
    const auto id = bbf::identity_from_string(identity);
    if (!id || !bbf::functional_equation_from_id(*id)) {
        return fail(BBF_ERR_UNKNOWN_IDENTITY, std::string("unknown functional equation '") + identity + "'");
    }
    return guarded([&] {
        bbf::Params params;
        for (size_t i = 0; i < param_count; ++i) {
            params.emplace_back(param_names[i], param_values[i]);
        }
        const auto report = bbf::check_functional_equation(*bbf::functional_equation_from_id(*id), params, order);
        *passed = report.passed() ? 1 : 0;
    });
}

bbf_status bbf_bernstein_basis(int n, int k, char **coeffs, size_t capacity, size_t *count)
{
    if (count == nullptr || (capacity > 0 && coeffs == nullptr)) {
        return fail(BBF_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const auto p = bbf::bernstein_basis(n, k);
        *count = p.coeffs().size();
        for (size_t i = 0; i < *count && i < capacity; ++i) {
            coeffs[i] = dup_string(p.coeffs()[i].str());
        }
    });
}

void bbf_string_free(char *s)
{
    std::free(s);
}

} // extern "C"
