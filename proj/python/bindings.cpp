// Thin pybind11 layer. Polynomials and reports cross the boundary as JSON
// strings; the Python package decodes them (big integers stay exact).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsn/characters.hpp"
#include "qsn/qgauss.hpp"
#include "qsn/supernomial.hpp"
#include "qsn/verify.hpp"
#include "qsn/verlinde.hpp"

namespace py = pybind11;
using namespace qsn;

namespace
{

std::string char_json(const CharacterValue &c)
{
    return nlohmann::ordered_json{
        {"q_shift", c.q_shift.to_string()}, {"z_shift", c.z_shift.to_string()}, {"poly", to_json(c.poly)}}
        .dump();
}

SiteVector site(int p, const std::vector<long> &n)
{
    if (n.size() < 2)
        throw std::invalid_argument("site vector needs at least N+ and N-");
    return SiteVector::make(p, n[0], n[1], std::vector<long>(n.begin() + 2, n.end()));
}

} // namespace

PYBIND11_MODULE(_qsupernomial, m)
{
    py::register_exception<NonFiniteSupport>(m, "NonFiniteSupport", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("qbin", [](long n, long k) { return to_json(qbin(n, k)).dump(); });
    m.def("qbin_plus", [](long n, long k) { return to_json(qbin_plus(n, k)).dump(); });
    m.def("qsup", [](const LVector &l, long a) { return to_json(qsup(l, a)).dump(); });
    m.def("d_vector", [](int p, const std::vector<std::pair<long, long>> &pairs) {
        std::vector<ElementaryPair> ps;
        for (const auto &[i, j] : pairs)
            ps.push_back({i, j});
        std::vector<std::string> out;
        for (const auto &v : d_vector(p, ps).dims)
            out.push_back(v.get_str());
        return out;
    });
    m.def("char_rep", [](int p, int r, long max_q, long zwin) { return char_json(char_rep(p, r, max_q, zwin)); });
    m.def("char_coinv", [](int p, int r, const std::vector<long> &n, const std::string &form) {
        if (form == "supernomial")
            return char_json(char_coinv_supernomial(p, r, site(p, n)));
        if (form == "fermionic")
            return char_json(char_coinv_fermionic(p, r, site(p, n)));
        throw std::invalid_argument("form must be 'supernomial' or 'fermionic'");
    });
    m.def("verify", [](const std::string &config_json) {
        const auto j = nlohmann::json::parse(config_json);
        SweepConfig c;
        c.identity = j.at("identity").get<std::string>();
        if (j.contains("p_lo")) c.p_lo = j["p_lo"].get<int>();
        if (j.contains("p_hi")) c.p_hi = j["p_hi"].get<int>();
        if (j.contains("nmax")) c.nmax = j["nmax"].get<long>();
        if (j.contains("range")) c.range = j["range"].get<long>();
        if (j.contains("lmax")) c.lmax = j["lmax"].get<long>();
        if (j.contains("amax")) c.amax = j["amax"].get<long>();
        if (j.contains("kmax")) c.kmax = j["kmax"].get<long>();
        if (j.contains("max_q")) c.max_q = j["max_q"].get<long>();
        if (j.contains("zwin")) c.zwin = j["zwin"].get<long>();
        if (j.contains("random")) c.random_cases = j["random"].get<long>();
        c.jobs = j.value("jobs", 1u);
        c.seed = j.value("seed", std::uint64_t{0});
        c.dual_labels = j.value("dual_labels", false);
        IdentityReport r;
        {
            py::gil_scoped_release nogil;
            r = run_identity(c);
        }
        return report_to_json(r).dump();
    });
    m.attr("identity_names") = identity_names();
    m.attr("report_schema") = report_schema().dump();
}
