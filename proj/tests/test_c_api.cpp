#include <doctest.h>

#include <string>
#include <vector>

#include <bbf/bbf.h>

extern "C" int bbf_header_compiles_as_c(void);

namespace
{

struct Config {
    bbf_config *handle = nullptr;
    Config() { REQUIRE(bbf_config_create(&handle) == BBF_OK); }
    ~Config() { bbf_config_destroy(handle); }
};

} // namespace

TEST_CASE("header is valid C")
{
    CHECK(bbf_header_compiles_as_c() == 1);
}

TEST_CASE("version and catalog")
{
    CHECK(std::string(bbf_version()) == "1.0.0");
    CHECK(bbf_schema_version() == 1);
    REQUIRE(bbf_identity_count() > 0);
    CHECK(std::string(bbf_identity_name(0)) == "egf_closed_form");
    CHECK(bbf_identity_summary(0) != nullptr);
    CHECK(bbf_identity_name(bbf_identity_count()) == nullptr);
}

TEST_CASE("configuration errors")
{
    Config c;
    CHECK(bbf_config_set_max_degree(c.handle, -1) == BBF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(bbf_last_error()).find("max_degree") != std::string::npos);
    CHECK(bbf_config_set_identities(c.handle, "verify_nothing") == BBF_ERR_UNKNOWN_IDENTITY);
    CHECK(bbf_config_set_mutate(c.handle, "nope") == BBF_ERR_UNKNOWN_IDENTITY);
    CHECK(bbf_config_set_series_eps(c.handle, "0") == BBF_ERR_INVALID_ARGUMENT);
    CHECK(bbf_config_set_series_eps(c.handle, "garbage") == BBF_ERR_INVALID_ARGUMENT);
    CHECK(bbf_config_set_format(c.handle, static_cast<bbf_format>(7)) == BBF_ERR_INVALID_ARGUMENT);

    CHECK(bbf_config_set_max_degree(c.handle, 30) == BBF_OK);
    CHECK(bbf_config_validate(c.handle) == BBF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(bbf_last_error()).find("egf_order") != std::string::npos);

    CHECK(bbf_config_set_max_degree(nullptr, 3) == BBF_ERR_INVALID_ARGUMENT);
    CHECK(bbf_run_verify(c.handle, nullptr) == BBF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("running a campaign through the C interface")
{
    Config c;
    REQUIRE(bbf_config_set_max_degree(c.handle, 3) == BBF_OK);
    REQUIRE(bbf_config_set_egf_order(c.handle, 6) == BBF_OK);
    REQUIRE(bbf_config_set_identities(c.handle, "verify_sum,verify_monomial") == BBF_OK);
    REQUIRE(bbf_config_set_series_eps(c.handle, "1/1000") == BBF_OK);
    REQUIRE(bbf_config_validate(c.handle) == BBF_OK);

    bbf_report *report = nullptr;
    REQUIRE(bbf_run_verify(c.handle, &report) == BBF_OK);
    CHECK(bbf_report_total(report) == 4 + 10);
    CHECK(bbf_report_passed(report) == bbf_report_total(report));
    CHECK(bbf_report_failed(report) == 0);

    const char *text = nullptr;
    size_t length = 0;
    REQUIRE(bbf_report_render(report, BBF_FORMAT_TEXT, &text, &length) == BBF_OK);
    CHECK(std::string(text, length).find("total=14 pass=14 fail=0") != std::string::npos);
    REQUIRE(bbf_report_render(report, BBF_FORMAT_JSON, &text, &length) == BBF_OK);
    CHECK(std::string(text, length).rfind("{\n  \"schema\": 1", 0) == 0);
    bbf_report_destroy(report);
}

TEST_CASE("mutation through the C interface")
{
    Config c;
    REQUIRE(bbf_config_set_max_degree(c.handle, 2) == BBF_OK);
    REQUIRE(bbf_config_set_egf_order(c.handle, 4) == BBF_OK);
    REQUIRE(bbf_config_set_identities(c.handle, "verify_sum") == BBF_OK);
    REQUIRE(bbf_config_set_mutate(c.handle, "verify_sum") == BBF_OK);
    bbf_report *report = nullptr;
    REQUIRE(bbf_run_verify(c.handle, &report) == BBF_OK);
    CHECK(bbf_report_failed(report) == 3);
    bbf_report_destroy(report);
}

TEST_CASE("single functional equation check")
{
    const char *names[] = {"k1", "k2"};
    const long values[] = {1, 1};
    int passed = 0;
    REQUIRE(bbf_check_functional_equation("FE-PROD", names, values, 2, 8, &passed) == BBF_OK);
    CHECK(passed == 1);
    REQUIRE(bbf_check_functional_equation("FE-SUM", nullptr, nullptr, 0, 12, &passed) == BBF_OK);
    CHECK(passed == 1);
    CHECK(bbf_check_functional_equation("verify_sum", nullptr, nullptr, 0, 12, &passed) == BBF_ERR_UNKNOWN_IDENTITY);
    CHECK(bbf_check_functional_equation("FE-PROD", names, values, 1, 8, &passed) == BBF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("basis coefficients as exact strings")
{
    std::vector<char *> coeffs(3, nullptr);
    size_t count = 0;
    REQUIRE(bbf_bernstein_basis(2, 1, coeffs.data(), coeffs.size(), &count) == BBF_OK);
    REQUIRE(count == 3);
    CHECK(std::string(coeffs[0]) == "0/1");
    CHECK(std::string(coeffs[1]) == "2/1");
    CHECK(std::string(coeffs[2]) == "-2/1");
    for (char *s : coeffs) {
        bbf_string_free(s);
    }
    REQUIRE(bbf_bernstein_basis(3, 5, nullptr, 0, &count) == BBF_OK);
    CHECK(count == 0);
    CHECK(bbf_bernstein_basis(-1, 0, nullptr, 0, &count) == BBF_ERR_INVALID_ARGUMENT);
}
