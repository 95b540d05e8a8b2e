// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>

#include "sphkl/checks.hpp"
#include "sphkl/oracles.hpp"

using namespace sphkl;
using checks::CheckResult;

namespace {

struct Datum {
    std::string name;
    int max_length;
};

const std::vector<Datum> kData{{"gl2", 10}, {"gl3", 10}, {"sp2", 10}, {"sp4", 8}, {"g2", 8}};

const Session& session(const std::string& name, const std::string& spec = "")
{
    static std::map<std::string, std::unique_ptr<Session>> cache;
    auto& slot = cache[name + "|" + spec];
    if (!slot) {
        std::optional<std::map<std::string, int>> s;
        if (!spec.empty())
            s = parse_specialization(spec);
        slot = std::make_unique<Session>(load_datum(name), s);
    }
    return *slot;
}

// Runs one check over several data and folds the results.
CheckResult over(const std::string& title, const std::vector<Datum>& data,
                 const std::function<CheckResult(const Session&, int)>& f)
{
    CheckResult total{title};
    for (const auto& d : data) {
        try {
            CheckResult r = f(session(d.name), d.max_length);
            for (auto& n : r.notes)
                n = d.name + ": " + r.name + ": " + n;
            total.merge(r);
        } catch (const std::exception& e) {
            total.fail(d.name + ": " + e.what());
        }
    }
    return total;
}

CheckResult named_weights()
{
    CheckResult r{"documented weight multiplicities"};
    auto expect = [&](const std::string& name, const Coweight& lam, const Coweight& mu, std::int64_t m) {
        ++r.cases;
        const auto& s = session(name);
        auto table = oracles::character_table(s.datum(), s.params().tilde());
        if (s.spherical().weight_multiplicity(lam, mu) != m || table.freudenthal(lam, mu) != m)
            r.fail(name + " " + vec_to_string(lam) + " " + vec_to_string(mu));
    };
    expect("gl2", {2, 0}, {1, 1}, 1);
    expect("sp2", {2}, {0}, 1);
    return r;
}

CheckResult negative_control()
{
    // v^s = v, v0^s = v^2 violates |n_{s0}| < n_s.
    CheckResult r{"negative control"};
    const auto& s = session("sp2", "v=1,v0=2");
    bool detected = false;
    for (const auto& lam : checks::grid(s, 10)) {
        ++r.cases;
        auto c = s.spherical().kl_spherical(lam);
        if (!c.positivity_ok) {
            if (c.offending.empty())
                r.fail("lambda=" + vec_to_string(lam) + ": positivity failed with no offending terms");
            else
                detected = true;
        }
    }
    if (!detected)
        r.fail("no certificate reported a positivity failure");
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main()
{
    const std::vector<Datum> small{{"gl2", 6}, {"gl3", 6}, {"sp2", 6}};
    struct Criterion {
        int number;
        double budget; // seconds, 0 for none
        std::function<std::vector<CheckResult>()> run;
    };
    std::vector<Criterion> criteria{
        {1, 60, [] { return std::vector{over("KL certificates", kData, checks::kl_certificates)}; }},
        {2, 0, [] { return std::vector{over("Hall-Littlewood expansion", kData, checks::hl_unitriangular)}; }},
        {3, 0, [&] { return std::vector{over("tensor multiplicities", small, checks::tensor)}; }},
        {4, 0, [] { return std::vector{over("weight multiplicities", kData, checks::weights), named_weights()}; }},
        {5, 0, [] { return std::vector{over("characters", kData, checks::characters)}; }},
        {6, 0,
         [] {
             return std::vector{over("commutation relations", kData,
                                     [](const Session& s, int) { return checks::commutation(s, 2); })};
         }},
        {7, 120,
         [] {
             std::vector<CheckResult> out;
             using F = CheckResult (*)(const Session&, int);
             const std::vector<std::pair<std::string, F>> parts{
                 {"quadratic and braid relations", [](const Session& s, int) { return checks::quadratic_braid(s, 6); }},
                 {"duality", [](const Session& s, int) { return checks::duality(s, 6); }},
                 {"Bernstein elements", [](const Session& s, int) { return checks::bernstein(s); }},
                 {"lengths of translations", checks::translation_length},
                 {"reflection order", [](const Session& s, int) { return checks::reflection_order(s, 2); }},
                 {"alpha-strings", [](const Session& s, int) { return checks::alpha_strings(s, 2); }},
                 {"Bruhat order", [](const Session& s, int) { return checks::bruhat_oracle(s, 6); }},
                 {"orbit sums", checks::orbit_sum},
                 {"standard KL recursion", [](const Session& s, int) { return checks::kl_generic(s, 6); }},
             };
             for (const auto& [title, f] : parts)
                 out.push_back(over(title, kData, f));
             return out;
         }},
        {8, 0, [] { return std::vector{negative_control()}; }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        try {
            results = c.run();
        } catch (const std::exception& e) {
            CheckResult r{"criterion"};
            r.fail(e.what());
            results.push_back(r);
        }
        double t = seconds_since(t0);
        bool ok = c.budget == 0 || t < c.budget;
        std::size_t cases = 0, failures = 0;
        for (const auto& r : results) {
            ok = ok && r.passed();
            cases += r.cases;
            failures += r.failures;
        }
        all = all && ok;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  (" << cases << " cases, "
                  << failures << " failed, " << std::fixed << std::setprecision(2) << t << " s)\n";
        for (const auto& r : results) {
            std::cout << "    " << r.name << ": " << r.cases << " cases, " << r.failures << " failed\n";
            for (const auto& n : r.notes)
                std::cout << "      " << n << "\n";
        }
        if (c.budget > 0 && t >= c.budget)
            std::cout << "      over the " << c.budget << " s budget\n";
    }
    return all ? 0 : 1;
}
