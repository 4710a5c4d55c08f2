// qsn: compute q-series objects and run identity sweeps from the shell.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsn/characters.hpp"
#include "qsn/qgauss.hpp"
#include "qsn/supernomial.hpp"
#include "qsn/verify.hpp"
#include "qsn/verlinde.hpp"

using json = nlohmann::ordered_json;
using namespace qsn;

namespace
{

class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_ints(const std::string &s)
{
    std::vector<long> out;
    static const std::regex num(R"(-?\d+)");
    static const std::regex allowed(R"(^[\s,;\-0-9]*$)");
    if (!std::regex_match(s, allowed))
        throw UsageError("malformed integer list '" + s + "'");
    for (std::sregex_iterator it(s.begin(), s.end(), num), end; it != end; ++it)
        out.push_back(std::stol(it->str()));
    return out;
}

std::vector<ElementaryPair> parse_pairs(const std::string &s)
{
    std::vector<ElementaryPair> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ';');) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        const auto v = parse_ints(item);
        if (v.size() != 2)
            throw UsageError("each pair needs exactly two integers 'i,j', got '" + item + "'");
        out.push_back({v[0], v[1]});
    }
    return out;
}

SiteVector parse_site(int p, const std::string &s)
{
    const auto v = parse_ints(s);
    if (v.size() < 2)
        throw UsageError("site vector needs at least N+ and N-");
    return SiteVector::make(p, v[0], v[1], std::vector<long>(v.begin() + 2, v.end()));
}

std::pair<int, int> parse_p_range(const std::string &s)
{
    static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("p range must look like '3' or '2..4', got '" + s + "'");
    const int lo = std::stoi(m[1]);
    return {lo, m[2].matched ? std::stoi(m[2]) : lo};
}

std::string render(const BiLaurent &p, const std::string &fmt)
{
    if (fmt == "text")
        return to_text(p);
    if (fmt == "latex")
        return to_latex(p);
    return to_json(p).dump();
}

std::string render(const CharacterValue &c, const std::string &fmt)
{
    if (fmt == "json")
        return json{{"q_shift", c.q_shift.to_string()}, {"z_shift", c.z_shift.to_string()}, {"poly", to_json(c.poly)}}
            .dump();
    std::string pre;
    if (fmt == "latex") {
        if (!c.z_shift.is_zero())
            pre += "z^{" + c.z_shift.to_string() + "}";
        if (!c.q_shift.is_zero())
            pre += "q^{" + c.q_shift.to_string() + "}";
        return pre.empty() ? to_latex(c.poly) : pre + "\\left(" + to_latex(c.poly) + "\\right)";
    }
    if (!c.z_shift.is_zero())
        pre += "z^(" + c.z_shift.to_string() + ")*";
    if (!c.q_shift.is_zero())
        pre += "q^(" + c.q_shift.to_string() + ")*";
    return pre.empty() ? to_text(c.poly) : pre + "(" + to_text(c.poly) + ")";
}

std::string render(const FusionVector &f, const std::string &fmt)
{
    std::vector<std::string> dims;
    for (const auto &v : f.dims)
        dims.push_back(to_string(v));
    if (fmt == "json")
        return json{{"dims", dims}}.dump();
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        s += (i ? ", " : "") + dims[i];
    return s + ")";
}

void print_failure(const Failure &f, const std::string &fmt)
{
    std::cout << "counterexample: " << f.params.dump() << "\n"
              << "  lhs = " << render(f.lhs, fmt == "json" ? "text" : fmt) << "\n"
              << "  rhs = " << render(f.rhs, fmt == "json" ? "text" : fmt) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact q-binomial, supernomial and fermionic character computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    unsigned jobs = 1;
    std::string report_path;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
    app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--report", report_path, "Write the JSON report to this path");
    app.add_option("--seed", seed, "Seed for randomized sweep cases");

    // compute
    auto *compute = app.add_subcommand("compute", "Compute a single object");
    std::string object;
    long n = 0, m = 0, a = 0, max_q = 0, zwin = 0;
    int p = 2, r = 0;
    std::string lvec, pairs, site, form = "supernomial";
    compute->add_option("object", object, "Object to compute")
        ->required()
        ->check(CLI::IsMember({"qbin", "qbin-plus", "qsup", "dvec", "char-rep", "char-coinv"}));
    compute->add_option("--n", n, "Upper index");
    compute->add_option("--m", m, "Lower index");
    compute->add_option("--L", lvec, "L vector, e.g. 1,1");
    compute->add_option("--a", a, "Supernomial index");
    compute->add_option("--p", p, "Period p");
    compute->add_option("--r", r, "Representation label r");
    compute->add_option("--pairs", pairs, "Elementary pairs, e.g. \"1,0;1,0\"");
    compute->add_option("--N", site, "Site vector N+,N-;N0,...");
    compute->add_option("--max-q", max_q, "q-degree cutoff");
    compute->add_option("--zwin", zwin, "z-degree window");
    compute->add_option("--form", form, "char-coinv formula")->check(CLI::IsMember({"supernomial", "fermionic"}));

    // verify
    auto *verify = app.add_subcommand("verify", "Run an identity sweep");
    std::string identity, p_range, config_path;
    std::optional<long> nmax, range, lmax, amax, kmax, vmax_q, vzwin, random_cases;
    bool dual_labels = false, inject_fault = false;
    std::vector<std::string> choices = identity_names();
    choices.push_back("all");
    verify->add_option("identity", identity, "Identity to check")->required()->check(CLI::IsMember(choices));
    verify->add_option("--p", p_range, "p or p range lo..hi");
    verify->add_option("--nmax", nmax, "Bound on site-vector entries");
    verify->add_option("--range", range, "Index window half-width");
    verify->add_option("--lmax", lmax, "Bound on L entries");
    verify->add_option("--amax", amax, "Bound on |a|");
    verify->add_option("--kmax", kmax, "Longest L vector");
    verify->add_option("--max-q", vmax_q, "q-degree cutoff");
    verify->add_option("--zwin", vzwin, "z-degree window");
    verify->add_option("--random", random_cases, "Randomized recurrence cases");
    verify->add_option("--config", config_path, "JSON file with sweep settings");
    verify->add_flag("--dual-labels", dual_labels, "dims: compare against label -r mod p");
    verify->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            std::string out;
            if (object == "qbin")
                out = render(qbin(n, m), format);
            else if (object == "qbin-plus")
                out = render(qbin_plus(n, m), format);
            else if (object == "qsup") {
                if (lvec.empty())
                    throw UsageError("qsup needs --L");
                out = render(qsup(parse_ints(lvec), a), format);
            } else if (object == "dvec")
                out = render(d_vector(p, parse_pairs(pairs)), format);
            else if (object == "char-rep")
                out = render(char_rep(p, r, max_q, zwin), format);
            else {
                if (site.empty())
                    throw UsageError("char-coinv needs --N");
                const SiteVector sv = parse_site(p, site);
                out = render(form == "fermionic" ? char_coinv_fermionic(p, r, sv) : char_coinv_supernomial(p, r, sv),
                             format);
            }
            std::cout << out << "\n";
            return 0;
        }

        SweepConfig cfg;
        bool config_p = false;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw UsageError("cannot read config '" + config_path + "'");
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception &e) {
                throw UsageError(std::string("config is not valid JSON: ") + e.what());
            }
            if (!j.is_object())
                throw UsageError("config must be a JSON object");
            try {
                auto opt = [&](const char *key, std::optional<long> &dst) {
                    if (j.contains(key))
                        dst = j.at(key).get<long>();
                };
                std::optional<long> pl, ph;
                opt("p_lo", pl);
                opt("p_hi", ph);
                config_p = pl || ph;
                if (pl)
                    cfg.p_lo = static_cast<int>(*pl);
                if (ph)
                    cfg.p_hi = static_cast<int>(*ph);
                opt("nmax", cfg.nmax);
                opt("range", cfg.range);
                opt("lmax", cfg.lmax);
                opt("amax", cfg.amax);
                opt("kmax", cfg.kmax);
                opt("max_q", cfg.max_q);
                opt("zwin", cfg.zwin);
                opt("random", cfg.random_cases);
                if (j.contains("jobs"))
                    cfg.jobs = j.at("jobs").get<unsigned>();
                if (j.contains("seed"))
                    cfg.seed = j.at("seed").get<std::uint64_t>();
                if (j.contains("dual_labels"))
                    cfg.dual_labels = j.at("dual_labels").get<bool>();
                if (j.contains("report") && report_path.empty())
                    report_path = j.at("report").get<std::string>();
            } catch (const json::exception &e) {
                throw UsageError(std::string("bad config value: ") + e.what());
            }
        }
        if (!p_range.empty()) {
            const auto [lo, hi] = parse_p_range(p_range);
            cfg.p_lo = lo;
            cfg.p_hi = hi;
        }
        for (auto [src, dst] : {std::pair{&nmax, &cfg.nmax}, {&range, &cfg.range}, {&lmax, &cfg.lmax},
                                {&amax, &cfg.amax}, {&kmax, &cfg.kmax}, {&vmax_q, &cfg.max_q}, {&vzwin, &cfg.zwin},
                                {&random_cases, &cfg.random_cases}})
            if (*src)
                *dst = *src;
        if (app.count("--jobs"))
            cfg.jobs = jobs;
        if (app.count("--seed"))
            cfg.seed = seed;
        cfg.dual_labels = cfg.dual_labels || dual_labels;
        cfg.inject_fault = inject_fault;

        std::vector<std::string> ids;
        if (identity == "all")
            ids = identity_names();
        else
            ids = {identity};

        IdentityReport total{identity, 0, {}, 0};
        for (const auto &id : ids) {
            SweepConfig c = cfg;
            c.identity = id;
            // In "all" mode per-identity p ranges fall back to defaults.
            if (identity == "all" && p_range.empty() && !config_p) {
                c.p_lo.reset();
                c.p_hi.reset();
            }
            IdentityReport rep = run_identity(c);
            if (format != "json")
                std::cout << id << ": " << rep.cases << " cases, " << rep.failures.size() << " failures\n";
            total.cases += rep.cases;
            total.ms += rep.ms;
            for (auto &f : rep.failures) {
                if (identity == "all")
                    f.params["identity"] = id;
                total.failures.push_back(std::move(f));
            }
        }
        if (format == "json")
            std::cout << report_to_json(total, false).dump() << "\n";
        else if (!total.failures.empty())
            print_failure(total.failures.front(), format);

        if (!report_path.empty()) {
            std::ofstream out(report_path);
            if (!out)
                throw UsageError("cannot write report '" + report_path + "'");
            out << report_to_json(total).dump(2) << "\n";
        }
        return total.failures.empty() ? 0 : 1;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
