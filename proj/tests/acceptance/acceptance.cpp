// Acceptance runner: one PASS/FAIL line per criterion. All thresholds below
// are pinned; comparisons inside the sweeps are exact (zero tolerance).

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qsn/verify.hpp"

using namespace qsn;

namespace
{

struct Pins
{
    long min_cases = 1;     // at least this many cases
    long exact_cases = -1;  // exactly this many cases when >= 0
    long budget_ms = -1;    // wall-clock budget when >= 0
};

struct Criterion
{
    SweepConfig cfg;
    Pins pins;
};

SweepConfig base(const std::string &id)
{
    SweepConfig c;
    c.identity = id;
    c.jobs = 1;
    c.seed = 20261016;
    return c;
}

std::map<int, Criterion> criteria()
{
    std::map<int, Criterion> m;
    {
        SweepConfig c = base("tb");
        c.p_lo = 2, c.p_hi = 4, c.nmax = 5;
        m[1] = {c, {500, -1, 5 * 60 * 1000}};
    }
    {
        SweepConfig c = base("ta");
        c.p_lo = 2, c.p_hi = 4, c.nmax = 5;
        m[2] = {c, {1, -1, 5 * 60 * 1000}};
    }
    {
        SweepConfig c = base("rdc");
        c.range = 5;
        m[3] = {c, {1, 14641, 60 * 1000}};
    }
    {
        // M, S in [-5, 8] with M + S >= 0 (141 pairs), a in [-5, 5]
        SweepConfig c = base("knuth");
        c.range = 5;
        m[4] = {c, {1, 141 * 11, 30 * 1000}};
    }
    {
        SweepConfig c = base("pascal");
        c.range = 8;
        m[5] = {c, {1, 17 * 17, -1}};
    }
    {
        SweepConfig c = base("dims");
        c.p_lo = 2, c.p_hi = 3, c.nmax = 4;
        m[6] = {c, {1, -1, -1}};
    }
    {
        SweepConfig c = base("stab");
        c.p_lo = 2, c.p_hi = 3, c.max_q = 6, c.zwin = 2;
        m[7] = {c, {1, -1, -1}};
    }
    {
        SweepConfig c = base("flow");
        c.p_lo = 2, c.p_hi = 3, c.nmax = 4;
        m[8] = {c, {1, -1, -1}};
    }
    {
        SweepConfig c = base("rec");
        c.p_lo = 2, c.p_hi = 3, c.lmax = 4, c.amax = 10;
        m[9] = {c, {1, -1, -1}};
    }
    {
        SweepConfig c = base("elementary");
        c.p_lo = 1, c.p_hi = 5;
        m[10] = {c, {1, -1, -1}};
    }
    return m;
}

std::string describe(const IdentityReport &r)
{
    return "[" + r.identity + "] cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failures.size()) +
           " ms=" + std::to_string(r.ms);
}

bool run(int id, const Criterion &c)
{
    const IdentityReport r = run_identity(c.cfg);
    std::string why;
    if (!r.failures.empty())
        why = "counterexample " + report_to_json(r, false)["failures"][0]["params"].dump();
    else if (r.cases < c.pins.min_cases)
        why = "fewer than " + std::to_string(c.pins.min_cases) + " cases";
    else if (c.pins.exact_cases >= 0 && r.cases != c.pins.exact_cases)
        why = "expected " + std::to_string(c.pins.exact_cases) + " cases";
    else if (c.pins.budget_ms >= 0 && r.ms > c.pins.budget_ms)
        why = "over the " + std::to_string(c.pins.budget_ms) + " ms budget";
    const bool ok = why.empty();
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " " << describe(r);
    if (!ok)
        std::cout << " (" << why << ")";
    std::cout << "\n";
    if (id == 6) {
        // diagnostic only: the same sweep under the dual labelling r -> -r mod p
        SweepConfig dual = c.cfg;
        dual.dual_labels = true;
        const IdentityReport d = run_identity(dual);
        std::cout << "  diagnostic (dual labels): " << describe(d) << "\n";
    }
    return ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"qsn acceptance runner"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10); default all")->check(CLI::Range(0, 10));
    CLI11_PARSE(app, argc, argv);

    bool all_ok = true;
    for (const auto &[id, c] : criteria())
        if (only == 0 || only == id)
            all_ok = run(id, c) && all_ok;
    return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
