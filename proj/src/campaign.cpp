#include <bbf/campaign.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <bbf/basis.hpp>
#include <bbf/egf.hpp>
#include <bbf/identities.hpp>

namespace bbf
{

namespace
{

struct Task {
    IdentityId id;
    std::vector<Rational> key;
    std::function<CheckResult()> run;
};

// SplitMix64: a fixed, portable generator so reports are reproducible across
// standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    Rational rational()
    {
        return Rational(uniform(-20, 20), uniform(1, 12));
    }

    Rational unit_rational()
    {
        const long den = uniform(1, 64);
        return Rational(uniform(0, den), den);
    }
};

SplitMix64 rng_for(std::uint64_t seed, IdentityId id, int n)
{
    SplitMix64 mix{seed};
    mix.state ^= (static_cast<std::uint64_t>(id) << 32) ^ static_cast<std::uint64_t>(n);
    mix.next();
    return mix;
}

Mutation mutation_for(const VerifyConfig &config, IdentityId id)
{
    return config.mutate == id ? Mutation::rhs_constant : Mutation::none;
}

IdentityReport check_roundtrip(int n, std::uint64_t seed, Mutation mutation)
{
    auto rng = rng_for(seed, IdentityId::basis_roundtrip, n);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= n; ++k) {
        coeffs.push_back(rng.rational());
    }
    const BernsteinForm f(n, coeffs);
    auto back = to_bernstein(to_monomial(f), n).coeffs();
    if (mutation != Mutation::none) {
        back.front() += Rational(1);
    }
    IdentityReport report{IdentityId::basis_roundtrip, {{"n", n}}};
    for (int k = 0; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        if (back[idx] != coeffs[idx]) {
            report.verdict = Verdict::fail;
            report.witness = Witness{std::nullopt, {{"k", k}}, {}, back[idx], coeffs[idx]};
            break;
        }
    }
    return report;
}

IdentityReport check_de_casteljau(int n, std::uint64_t seed, Mutation mutation)
{
    auto rng = rng_for(seed, IdentityId::basis_de_casteljau, n);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= n; ++k) {
        coeffs.push_back(rng.rational());
    }
    const BernsteinForm f(n, coeffs);
    const Poly1 mono = to_monomial(f);
    IdentityReport report{IdentityId::basis_de_casteljau, {{"n", n}}};
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = rng.unit_rational();
        const Rational lhs = eval_de_casteljau(f, x);
        Rational rhs = mono.eval(x);
        if (mutation != Mutation::none) {
            rhs += Rational(1);
        }
        if (lhs != rhs) {
            report.verdict = Verdict::fail;
            report.witness = Witness{std::nullopt, {}, {{"x", x}}, lhs, rhs};
            break;
        }
    }
    return report;
}

std::vector<Rational> series_points(SeriesId id)
{
    if (id == SeriesId::tg3) {
        return {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    }
    return {Rational(5, 8), Rational(3, 4), Rational(1)};
}

void enumerate(const VerifyConfig &cfg, IdentityId id, std::vector<Task> &tasks)
{
    const int D = cfg.max_degree;
    const int N = cfg.egf_order;
    const Mutation mut = mutation_for(cfg, id);
    const auto add = [&](std::vector<Rational> key, std::function<CheckResult()> fn) {
        tasks.push_back({id, std::move(key), std::move(fn)});
    };
    const auto add_fe = [&](FunctionalEquation fe, Params params) {
        std::vector<Rational> key;
        for (const auto &p : params) {
            key.emplace_back(p.second);
        }
        add(std::move(key), [fe, params, N, mut] { return check_functional_equation(fe, params, N, mut); });
    };

    if (const auto fe = functional_equation_from_id(id)) {
        const auto names = functional_equation_params(*fe);
        if (names.empty()) {
            add_fe(*fe, {});
        } else if (names.size() == 1) {
            for (int a = 0; a <= D; ++a) {
                add_fe(*fe, {{names[0], a}});
            }
        } else {
            for (int a = 0; a <= D; ++a) {
                for (int b = 0; b <= D; ++b) {
                    add_fe(*fe, {{names[0], a}, {names[1], b}});
                }
            }
        }
        return;
    }

    const int margin = cfg.grid_margin;
    const std::uint64_t seed = cfg.seed;
    switch (id) {
    case IdentityId::egf_closed_form:
        for (int k = 0; k <= D; ++k) {
            add({k}, [k, N, mut] { return check_egf_closed_form(k, N, mut); });
        }
        break;
    case IdentityId::sum:
        for (int n = 0; n <= D; ++n) {
            add({n}, [n, mut] { return verify_sum(n, mut); });
        }
        break;
    case IdentityId::alternating_sum:
        for (int n = 0; n <= D; ++n) {
            add({n}, [n, mut] { return verify_alternating_sum(n, mut); });
        }
        break;
    case IdentityId::subdivision_product:
    case IdentityId::subdivision_affine:
    case IdentityId::subdivision_trivariate: {
        const auto variant = id == IdentityId::subdivision_product
                                 ? SubdivisionVariant::product
                                 : (id == IdentityId::subdivision_affine ? SubdivisionVariant::affine
                                                                         : SubdivisionVariant::trivariate);
        for (int n = 0; n <= D; ++n) {
            for (int j = 0; j <= n; ++j) {
                add({n, j}, [=] { return verify_subdivision(variant, n, j, mut, margin); });
            }
        }
        break;
    }
    case IdentityId::monomial:
        for (int n = 0; n <= D; ++n) {
            for (int l = 0; l <= n; ++l) {
                add({n, l}, [=] { return verify_monomial(n, l, mut); });
            }
        }
        break;
    case IdentityId::derivative:
        for (int n = 0; n <= D; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int l = 0; l <= n; ++l) {
                    add({n, k, l}, [=] { return verify_derivative(n, k, l, mut); });
                }
            }
        }
        break;
    case IdentityId::recurrence:
        for (int n = 0; n <= D; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int v = 0; v <= n; ++v) {
                    add({n, k, v}, [=] { return verify_recurrence(n, k, v, mut); });
                }
            }
        }
        break;
    case IdentityId::degree_raise_x:
    case IdentityId::degree_raise_1mx:
    case IdentityId::degree_elevation: {
        const auto op = id == IdentityId::degree_raise_x
                            ? DegreeOp::raise_x
                            : (id == IdentityId::degree_raise_1mx ? DegreeOp::raise_1mx : DegreeOp::elevation);
        const int max_d = op == DegreeOp::elevation ? 1 : 3;
        for (int n = 0; n <= D; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int d = 1; d <= max_d; ++d) {
                    add({n, k, d}, [=] { return verify_degree_ops(op, n, k, d, mut); });
                }
            }
        }
        break;
    }
    case IdentityId::product:
        for (int n = 0; n <= D; ++n) {
            for (int k1 = 0; k1 <= n; ++k1) {
                for (int k2 = 0; k2 <= n; ++k2) {
                    add({n, k1, k2}, [=] { return verify_product(n, k1, k2, mut); });
                }
            }
        }
        break;
    case IdentityId::two_point:
        for (int n = 0; n <= D; ++n) {
            for (int k = 0; 2 * k <= n; ++k) {
                add({n, k}, [=] { return verify_two_point(n, k, mut); });
            }
        }
        break;
    case IdentityId::finite_sum_tg1:
    case IdentityId::finite_sum_tg2:
    case IdentityId::finite_sum_tg5: {
        const auto variant = id == IdentityId::finite_sum_tg1
                                 ? FiniteSum::tg1
                                 : (id == IdentityId::finite_sum_tg2 ? FiniteSum::tg2 : FiniteSum::tg5);
        for (int n = 0; n <= D; ++n) {
            for (int k = 0; k <= n; ++k) {
                add({n, k}, [=] { return verify_finite_sum(variant, n, k, mut); });
            }
        }
        break;
    }
    case IdentityId::basis_roundtrip:
        for (int n = 0; n <= D; ++n) {
            add({n}, [=] { return check_roundtrip(n, seed, mut); });
        }
        break;
    case IdentityId::basis_de_casteljau:
        for (int n = 0; n <= D; ++n) {
            add({n}, [=] { return check_de_casteljau(n, seed, mut); });
        }
        break;
    case IdentityId::series_tg3:
    case IdentityId::series_tg4: {
        const auto series = id == IdentityId::series_tg3 ? SeriesId::tg3 : SeriesId::tg4;
        const Rational eps = cfg.series_eps;
        for (int k = 0; k <= std::min(3, D); ++k) {
            for (const auto &x : series_points(series)) {
                add({k, x}, [=] {
                    const long terms = required_terms(series, k, x, eps);
                    return partial_sum(series, k, x, terms, mut);
                });
            }
        }
        break;
    }
    default:
        throw std::logic_error("identity without an enumeration: " + std::string(to_string(id)));
    }
}

void run_tasks(std::vector<Task> &tasks, std::vector<std::optional<CheckResult>> &out, unsigned threads)
{
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            try {
                out[i] = tasks[i].run();
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// ---------------------------------------------------------------- rendering

using ojson = nlohmann::ordered_json;

ojson witness_json(const Witness &w)
{
    ojson j;
    if (w.egf_index) {
        j["egf_index"] = *w.egf_index;
    }
    if (!w.monomial.empty()) {
        ojson m = ojson::object();
        for (const auto &[name, e] : w.monomial) {
            m[name] = e;
        }
        j["monomial"] = m;
    }
    if (!w.point.empty()) {
        ojson p = ojson::object();
        for (const auto &[name, v] : w.point) {
            p[name] = v.str();
        }
        j["point"] = p;
    }
    j["lhs"] = w.lhs.str();
    j["rhs"] = w.rhs.str();
    return j;
}

ojson result_json(const CheckResult &r)
{
    ojson j;
    if (const auto *rep = std::get_if<IdentityReport>(&r)) {
        j["id"] = std::string(to_string(rep->id));
        ojson params = ojson::object();
        for (const auto &[name, v] : rep->params) {
            params[name] = v;
        }
        j["params"] = params;
        j["verdict"] = std::string(to_string(rep->verdict));
        j["method"] = std::string(to_string(rep->method));
        if (!rep->note.empty()) {
            j["note"] = rep->note;
        }
        if (rep->witness) {
            j["witness"] = witness_json(*rep->witness);
        }
        return j;
    }
    const auto &s = std::get<SeriesCheck>(r);
    j["id"] = std::string(to_string(identity_id(s.series_id)));
    j["params"] = ojson{{"k", s.k}, {"x", s.x.str()}};
    j["verdict"] = s.within_bound() ? "pass" : "fail";
    j["method"] = "series";
    j["note"] = "convergence domain " + std::string(convergence_domain(s.series_id)) + " derived by ratio test";
    j["terms_used"] = s.terms_used;
    j["partial_sum"] = s.partial_sum.str();
    j["limit"] = s.limit.str();
    j["tail_bound"] = s.tail_bound.str();
    j["error"] = s.error().str();
    return j;
}

std::string params_text(const Params &params)
{
    std::string out;
    for (const auto &[name, v] : params) {
        out += " " + name + "=" + std::to_string(v);
    }
    return out;
}

std::string witness_text(const Witness &w)
{
    std::string out = " witness";
    if (w.egf_index) {
        out += " t^" + std::to_string(*w.egf_index) + "/" + std::to_string(*w.egf_index) + "!";
    }
    for (const auto &[name, e] : w.monomial) {
        out += " " + name + "^" + std::to_string(e);
    }
    for (const auto &[name, v] : w.point) {
        out += " " + name + "=" + v.str();
    }
    return out + ": lhs=" + w.lhs.str() + " rhs=" + w.rhs.str();
}

std::string result_text(const CheckResult &r)
{
    if (const auto *rep = std::get_if<IdentityReport>(&r)) {
        std::string line = std::string(rep->passed() ? "PASS " : "FAIL ") + std::string(to_string(rep->id))
                           + params_text(rep->params) + " [" + std::string(to_string(rep->method)) + "]";
        if (rep->witness) {
            line += witness_text(*rep->witness);
        }
        return line;
    }
    const auto &s = std::get<SeriesCheck>(r);
    char buf[128];
    std::snprintf(buf, sizeof buf, " N=%ld error=%.3e bound=%.3e", s.terms_used, s.error().to_double(),
                  s.tail_bound.to_double());
    return std::string(s.within_bound() ? "PASS " : "FAIL ") + std::string(to_string(identity_id(s.series_id)))
           + " k=" + std::to_string(s.k) + " x=" + s.x.str() + " [series]" + buf;
}

std::vector<std::string> selected_names(const VerifyConfig &cfg)
{
    std::vector<std::string> names;
    for (const auto &info : identity_catalog()) {
        if (cfg.identities.empty() || cfg.identities.contains(info.id)) {
            names.emplace_back(info.name);
        }
    }
    return names;
}

} // namespace

std::string_view version()
{
    return "1.0.0";
}

void VerifyConfig::validate() const
{
    if (max_degree < 0) {
        throw UsageError("max_degree must be >= 0");
    }
    if (egf_order < max_degree) {
        throw UsageError("egf_order (" + std::to_string(egf_order) + ") must be >= max_degree ("
                         + std::to_string(max_degree) + ")");
    }
    if (grid_margin < 0) {
        throw UsageError("grid_margin must be >= 0");
    }
    if (series_eps <= Rational(0)) {
        throw UsageError("series_eps must be > 0");
    }
}

std::set<IdentityId> parse_identity_selection(std::string_view comma_list)
{
    std::set<IdentityId> out;
    std::size_t start = 0;
    while (start <= comma_list.size()) {
        auto end = comma_list.find(',', start);
        if (end == std::string_view::npos) {
            end = comma_list.size();
        }
        auto name = comma_list.substr(start, end - start);
        start = end + 1;
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) {
            name.remove_prefix(1);
        }
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
            name.remove_suffix(1);
        }
        if (name.empty()) {
            continue;
        }
        if (const auto id = identity_from_string(name)) {
            out.insert(*id);
            continue;
        }
        bool matched = false;
        for (const auto &info : identity_catalog()) {
            if (info.name.size() > name.size() && info.name.starts_with(name) && info.name[name.size()] == '.') {
                out.insert(info.id);
                matched = true;
            }
        }
        if (!matched) {
            throw UsageError("unknown identity '" + std::string(name) + "' (see --list-identities)");
        }
    }
    return out;
}

IdentityId result_id(const CheckResult &r)
{
    if (const auto *rep = std::get_if<IdentityReport>(&r)) {
        return rep->id;
    }
    return identity_id(std::get<SeriesCheck>(r).series_id);
}

bool result_passed(const CheckResult &r)
{
    if (const auto *rep = std::get_if<IdentityReport>(&r)) {
        return rep->passed();
    }
    return std::get<SeriesCheck>(r).within_bound();
}

CampaignReport run_verify(const VerifyConfig &config)
{
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    std::vector<Task> tasks;
    for (const auto &info : identity_catalog()) {
        if (config.identities.empty() || config.identities.contains(info.id)) {
            enumerate(config, info.id, tasks);
        }
    }

    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::optional<CheckResult>> results(tasks.size());
    run_tasks(tasks, results, threads);

    std::vector<std::size_t> order(tasks.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (tasks[a].id != tasks[b].id) {
            return tasks[a].id < tasks[b].id;
        }
        return std::lexicographical_compare(tasks[a].key.begin(), tasks[a].key.end(), tasks[b].key.begin(),
                                            tasks[b].key.end());
    });

    CampaignReport report{config};
    report.results.reserve(tasks.size());
    for (const auto i : order) {
        report.results.push_back(std::move(*results[i]));
        if (result_passed(report.results.back())) {
            ++report.passed;
        } else {
            ++report.failed;
        }
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string emit_report(const CampaignReport &report, ReportFormat format)
{
    const auto &cfg = report.config;
    if (format == ReportFormat::json) {
        ojson j;
        j["schema"] = report_schema;
        j["version"] = std::string(version());
        j["config"] = ojson{{"max_degree", cfg.max_degree},
                            {"egf_order", cfg.egf_order},
                            {"identities", selected_names(cfg)},
                            {"grid_margin", cfg.grid_margin},
                            {"series_eps", cfg.series_eps.str()},
                            {"format", cfg.format == ReportFormat::json ? "json" : "text"},
                            {"seed", cfg.seed},
                            {"mutate", cfg.mutate ? ojson(std::string(to_string(*cfg.mutate))) : ojson(nullptr)}};
        ojson results = ojson::array();
        for (const auto &r : report.results) {
            results.push_back(result_json(r));
        }
        j["results"] = std::move(results);
        j["totals"] = ojson{{"total", report.total()}, {"pass", report.passed}, {"fail", report.failed}};
        j["wall_time_seconds"] = report.wall_time_seconds;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "bbverify " << version() << " schema=" << report_schema << " max_degree=" << cfg.max_degree
       << " egf_order=" << cfg.egf_order << " grid_margin=" << cfg.grid_margin << " series_eps="
       << cfg.series_eps.str() << " seed=" << cfg.seed << "\n";
    for (const auto &r : report.results) {
        os << result_text(r) << "\n";
    }
    os << "total=" << report.total() << " pass=" << report.passed << " fail=" << report.failed << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall_time=%.3fs", report.wall_time_seconds);
    os << buf << "\n";
    return os.str();
}

} // namespace bbf
