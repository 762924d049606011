// starlax: command-line front end for the verification engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starlax/errors.hpp"
#include "starlax/parallel.hpp"
#include "starlax/suite.hpp"
#include "starlax/waring.hpp"

using namespace starlax;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int order = 8;
    std::string params;
    std::vector<std::string> systems;
    std::vector<int> n;
    std::string r_override;
    std::string format = "text";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool no_timing = false;
    std::string variant = "both";
    int k = 4;
};

std::vector<std::string> split_list(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

RunConfig make_config(const Options& o)
{
    RunConfig c;
    c.order = o.order;
    if (!o.params.empty()) c.params = Params::parse(o.params);
    if (!o.systems.empty()) {
        c.systems.clear();
        for (const auto& s : split_list(o.systems)) c.systems.push_back(parse_system(s));
    }
    if (!o.n.empty()) c.n_range = o.n;
    for (int n : c.n_range)
        if (n < 1) throw ArgumentError("--n must be at least 1");
    if (!o.r_override.empty()) c.r_override = parse_group(o.r_override);
    if (o.variant == "plain")
        c.variants = {ChiVariant::plain};
    else if (o.variant == "tilde")
        c.variants = {ChiVariant::tilde};
    c.seed = o.seed;
    c.jobs = std::max(1, o.jobs);
    c.timing = !o.no_timing;
    c.format = o.format == "json" ? OutputFormat::json : OutputFormat::text;
    if (c.order < 0) throw ArgumentError("--order must be non-negative");
    return c;
}

void require_quantum_order(const RunConfig& c)
{
    if (c.order < 2) throw ArgumentError("quantum checks need --order >= 2");
}

int finish(const std::vector<CheckReport>& reports, const RunConfig& c)
{
    std::cout << emit_report(reports, c);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    if (c.format == OutputFormat::text && !reports.empty())
        std::cout << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
    return failed == 0 ? 0 : kExitFail;
}

using Runner = std::function<std::vector<CheckReport>(const RunConfig&)>;

std::vector<CheckReport> per_system(const RunConfig& c, const std::function<CheckReport(SystemId)>& fn)
{
    return parallel_map(c.systems.size(), c.jobs, [&](std::size_t i) { return fn(c.systems[i]); });
}

const std::vector<std::pair<std::string, std::pair<std::string, Runner>>>& verify_commands()
{
    static const std::vector<std::pair<std::string, std::pair<std::string, Runner>>> table{
        {"cybe", {"classical Yang-Baxter equation for r and r~", [](const RunConfig& c) { return cybe_reports(c.order); }}},
        {"qybe",
         {"quantum Yang-Baxter equation for the table R-matrices and random f",
          [](const RunConfig& c) {
              require_quantum_order(c);
              return qybe_reports(c.order, c.params, c.seed, 5);
          }}},
        {"unitarity",
         {"R12 R21 against the closed-form scalars",
          [](const RunConfig& c) {
              require_quantum_order(c);
              return unitarity_reports(c.order, c.params);
          }}},
        {"rll",
         {"one-particle RLL relation per system",
          [](const RunConfig& c) {
              require_quantum_order(c);
              return per_system(c, [&](SystemId s) { return check_rll(s, c.params, c.order, c.r_override); });
          }}},
        {"rtt",
         {"RTT relation for the n-particle monodromy",
          [](const RunConfig& c) {
              require_quantum_order(c);
              std::vector<CheckReport> out;
              for (int n : c.n_range) {
                  auto part = per_system(c, [&](SystemId s) { return check_rtt(s, n, c.params, c.order, c.r_override); });
                  out.insert(out.end(), part.begin(), part.end());
              }
              return out;
          }}},
        {"commute",
         {"star-commutativity of the characteristic-function coefficients",
          [](const RunConfig& c) {
              require_quantum_order(c);
              std::vector<CheckReport> out;
              for (auto s : c.systems)
                  for (int n : c.n_range)
                      for (auto v : c.variants) out.push_back(check_char_commute(s, n, v, c.params, c.order, c.jobs));
              return out;
          }}},
        {"classical",
         {"classical Toda cross-checks (order ignored)",
          [](const RunConfig& c) {
              std::vector<CheckReport> out;
              for (int n : c.n_range) {
                  auto part = classical_checks(n, c.seed);
                  out.insert(out.end(), part.begin(), part.end());
              }
              return out;
          }}},
        {"repr",
         {"standard and Weyl representations intertwine the star products",
          [](const RunConfig& c) {
              require_quantum_order(c);
              return representation_reports(c.order, c.seed, 100);
          }}},
    };
    return table;
}

int run_corrections(const RunConfig& c, int n, int k)
{
    require_quantum_order(c);
    if (n < 1 || k < 1) throw ArgumentError("--n and --k must be at least 1");
    auto corr = quantum_correction(n, k, c.order);
    std::vector<CheckReport> reports;
    if (k <= 6) reports = correction_reports(n, c.order, {k});
    if (c.format == OutputFormat::json) {
        std::cout << emit_report(reports, c);
    } else {
        std::cout << "Ihat" << k << " - I" << k << " (n=" << n << ", order " << c.order << ") = " << corr.str() << "\n";
        if (k > 6) std::cout << "no closed form to compare against for k > 6\n";
        std::cout << emit_report(reports, c);
    }
    for (const auto& r : reports)
        if (!r.pass) return kExitFail;
    return 0;
}

int run_suite(const RunConfig& c)
{
    auto results = run_acceptance(c.seed, c.jobs);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    if (c.format == OutputFormat::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json o;
            o["schema"] = 1;
            o["criterion"] = r.id;
            o["title"] = r.title;
            o["pass"] = r.pass;
            o["wall_time_ms"] = c.timing ? nlohmann::ordered_json(r.wall_time_ms) : nullptr;
            o["budget_ms"] = r.budget_ms;
            o["checks"] = nlohmann::ordered_json::parse(emit_report(r.checks, [&] {
                RunConfig cc = c;
                cc.format = OutputFormat::json;
                return cc;
            }()));
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) std::cout << render_criterion(r, c.timing) << "\n";
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.pass ? 1 : 0;
        std::cout << passed << "/" << results.size() << " criteria passed\n";
    }
    return all ? 0 : kExitFail;
}

void add_options(CLI::App& app, Options& o)
{
    app.set_config("--config", "", "TOML/INI file setting any of these options by long name");
    app.add_option("--order", o.order, "truncation order N in hbar (>= 2 for quantum checks)")->capture_default_str();
    app.add_option("--params", o.params, "exact parameters, e.g. eps=2,g=3,delta=1/2");
    app.add_option("--system", o.systems,
                   "systems A1..C2 (repeat or comma-separate); A* pair with the rational R, "
                   "B* with the trigonometric R, C* with the eps-deformed trigonometric R");
    app.add_option("--n", o.n, "particle counts (repeat or comma-separate); one value for waring")->delimiter(',');
    app.add_option("--k", o.k, "power k for waring corrections")->capture_default_str();
    app.add_option("--r-override", o.r_override, "pair each system with the R-matrix of group A, B or C");
    app.add_option("--variant", o.variant, "characteristic function variant")
        ->check(CLI::IsMember({"plain", "tilde", "both"}))
        ->capture_default_str();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    app.add_flag("--no-timing", o.no_timing, "omit wall-clock times (byte-identical reports)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of star-product Lax integrability"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Options may appear before or after the subcommand.");

    Options o;
    add_options(app, o);
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "run one family of checks");
    verify->require_subcommand(1);
    for (const auto& [cmd, entry] : verify_commands()) {
        auto* sub = verify->add_subcommand(cmd, entry.first);
        const Runner& runner = entry.second;
        sub->callback([&o, &action, &runner] {
            action = [&o, &runner] {
                auto c = make_config(o);
                return finish(runner(c), c);
            };
        });
    }

    auto* waring = app.add_subcommand("waring", "Waring-formula computations");
    waring->require_subcommand(1);
    auto* corrections = waring->add_subcommand("corrections", "render Ihat_k - I_k and compare with the closed form");
    corrections->callback([&] {
        action = [&] {
            if (o.n.size() > 1) throw ArgumentError("waring corrections takes a single --n");
            const int n = o.n.empty() ? 4 : o.n.front();
            return run_corrections(make_config(o), n, o.k);
        };
    });

    app.add_subcommand("suite", "run every acceptance criterion and print a summary table")->callback([&] {
        action = [&] { return run_suite(make_config(o)); };
    });

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
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
