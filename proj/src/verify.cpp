#include "qsn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "qsn/characters.hpp"
#include "qsn/fermionic.hpp"
#include "qsn/qgauss.hpp"
#include "qsn/supernomial.hpp"
#include "qsn/verlinde.hpp"

namespace qsn
{

using json = nlohmann::ordered_json;

namespace
{

// Nondecreasing tuples of length len with entries in [0, hi].
template <typename F>
void for_each_monotone(int len, long hi, F &&f)
{
    std::vector<long> v(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto &&self, int i, long lo) -> void {
        if (i == len) {
            f(v);
            return;
        }
        for (long x = lo; x <= hi; ++x) {
            v[i] = x;
            self(self, i + 1, x);
        }
    };
    rec(rec, 0, 0);
}

bool l_nonnegative(const SiteVector &n)
{
    const LVector l = l_vector(n);
    return std::all_of(l.begin(), l.end(), [](long x) { return x >= 0; });
}

json site_json(const SiteVector &n) { return json(n.coords()); }

CaseOutcome compare(BiLaurent lhs, BiLaurent rhs)
{
    CaseOutcome o;
    o.ok = lhs == rhs;
    if (!o.ok) {
        o.lhs = std::move(lhs);
        o.rhs = std::move(rhs);
    }
    return o;
}

CaseOutcome fail_with(const BiLaurent &lhs, const BiLaurent &rhs, json detail)
{
    CaseOutcome o;
    o.ok = false;
    o.lhs = lhs;
    o.rhs = rhs;
    o.detail = std::move(detail);
    return o;
}

BiLaurent constant(const BigInt &v) { return BiLaurent::constant(v); }

// Site vectors of the tb / ta sweeps: N_+ + N_- = s <= nmax, N_- in [-p, s+p].
template <typename F>
void tb_sweep(const SweepConfig &c, F &&f)
{
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (int d = 0; d <= 2 * p - 3; ++d)
            for (long s = 0; s <= *c.nmax; ++s)
                for (long nm = -p; nm <= s + p; ++nm)
                    for_each_monotone(d, s, [&](const std::vector<long> &h) {
                        const SiteVector n = SiteVector::make(p, s - nm, nm, h);
                        if (l_nonnegative(n))
                            f(n);
                    });
}

// Site vectors with d = p-1, every entry in [0, nmax], L >= 0.
template <typename F>
void coinv_sweep(const SweepConfig &c, F &&f)
{
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (long np = 0; np <= *c.nmax; ++np)
            for (long nm = 0; nm <= *c.nmax; ++nm)
                for_each_monotone(p - 1, std::min(np + nm, *c.nmax), [&](const std::vector<long> &h) {
                    const SiteVector n = SiteVector::make(p, np, nm, h);
                    if (l_nonnegative(n))
                        f(n);
                });
}

std::vector<Case> cases_tb(const SweepConfig &c, bool well_balanced)
{
    std::vector<Case> out;
    tb_sweep(c, [&](const SiteVector &n) {
        if (well_balanced) {
            const long bound = -(2L * n.p - n.d - 2);
            const long last = n.last_h();
            if (2 * n.n_plus - last < bound || 2 * n.n_minus - last < bound)
                return;
        }
        out.push_back({json{{"p", n.p}, {"d", n.d}, {"N", site_json(n)}}, [n, well_balanced] {
                           SumOptions opts;
                           bool negative = false;
                           std::vector<long> witness;
                           if (well_balanced)
                               opts.on_contributing = [&](const std::vector<long> &v) {
                                   if (!negative && std::any_of(v.begin(), v.end(), [](long x) { return x < 0; })) {
                                       negative = true;
                                       witness = v;
                                   }
                               };
                           BiLaurent lhs = chi_fermionic(n, {}, opts);
                           BiLaurent rhs = chi_supernomial(n.p, l_vector(n), n.n_minus);
                           if (negative)
                               return fail_with(lhs, rhs, json{{"check", "nonnegative-support"}, {"n", witness}});
                           return compare(std::move(lhs), std::move(rhs));
                       }});
    });
    return out;
}

std::vector<Case> cases_pascal(const SweepConfig &c)
{
    const long r = *c.range;
    auto regen = std::make_shared<std::map<QBinArgs, BiLaurent>>(regenerate_qbin_plus(-r, r, -r, r));
    std::vector<Case> out;
    for (long n = -r; n <= r; ++n)
        for (long m = -r; m <= r; ++m)
            out.push_back({json{{"n", n}, {"m", m}}, [n, m, regen] {
                               const BiLaurent v = qbin_plus(n, m);
                               const BiLaurent a = qbin_plus(n - 1, m).shifted(Rational(m)) + qbin_plus(n - 1, m - 1);
                               if (v != a)
                                   return fail_with(v, a, json{{"check", "pascal-A"}});
                               const BiLaurent b = qbin_plus(n - 1, m) + qbin_plus(n - 1, m - 1).shifted(Rational(n - m));
                               if (v != b)
                                   return fail_with(v, b, json{{"check", "pascal-B"}});
                               const BiLaurent &g = regen->at(QBinArgs{n, m});
                               if (v != g)
                                   return fail_with(v, g, json{{"check", "regeneration"}});
                               return CaseOutcome{};
                           }});
    return out;
}

std::vector<Case> cases_rdc(const SweepConfig &c)
{
    const long r = *c.range;
    std::vector<Case> out;
    for (long bn = -r; bn <= r; ++bn)
        for (long bm = -r; bm <= r; ++bm)
            for (long n = -r; n <= r; ++n)
                for (long m = -r; m <= r; ++m)
                    out.push_back({json{{"N", bn}, {"M", bm}, {"n", n}, {"m", m}}, [=] {
                                       return compare(qbin_plus(bn, n) * qbin_plus(bm, m), rdc_rhs(bn, bm, n, m));
                                   }});
    return out;
}

std::vector<Case> cases_knuth(const SweepConfig &c)
{
    // M, S in [-R, R+3], a in [-R, R]; R = 5 gives the window [-5, 8] x [-5, 5].
    const long r = *c.range;
    std::vector<Case> out;
    for (long bm = -r; bm <= r + 3; ++bm)
        for (long s = -r; s <= r + 3; ++s) {
            if (bm + s < 0)
                continue;
            for (long a = -r; a <= r; ++a)
                out.push_back({json{{"M", bm}, {"S", s}, {"a", a}},
                               [=] { return compare(knuth_lhs(bm, s, a), qbin(bm + s, s + a)); }});
        }
    return out;
}

// Increments L at 1-based position k (no-op for k = 0).
LVector bumped(LVector l, std::size_t k)
{
    if (k > 0)
        ++l[k - 1];
    return l;
}

std::vector<Case> cases_rec(const SweepConfig &c)
{
    std::vector<Case> out;
    const long lmax = *c.lmax, amax = *c.amax;

    // Supernomial recurrence and zero-column truncation.
    for (long k = 1; k <= *c.kmax; ++k) {
        LVector l(static_cast<std::size_t>(k), 0);
        auto rec = [&](auto &&self, std::size_t i) -> void {
            if (i == l.size()) {
                for (long a = -amax; a <= amax; ++a) {
                    out.push_back({json{{"check", "supernomial-recurrence"}, {"L", l}, {"a", a}}, [l, a] {
                                       const std::size_t k = l.size();
                                       return compare(qsup(bumped(l, k), a),
                                                      qsup(bumped(l, k - 1), a - 1) + qsup(l, a).shifted(Rational(a)));
                                   }});
                    out.push_back({json{{"check", "zero-column"}, {"L", l}, {"a", a}}, [l, a] {
                                       LVector padded = l;
                                       padded.push_back(0);
                                       return compare(qsup(padded, a), qsup(l, a));
                                   }});
                }
                return;
            }
            for (long x = 0; x <= lmax; ++x) {
                l[i] = x;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }

    // rec1 on the supernomial side of the character identity.
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (long k = 2; k <= *c.kmax; ++k) {
            LVector l(static_cast<std::size_t>(k), 0);
            auto rec = [&](auto &&self, std::size_t i) -> void {
                if (i == l.size()) {
                    for (long nm = -p - 1; nm <= 2L * p + 1; ++nm)
                        out.push_back({json{{"check", "rec1"}, {"p", p}, {"L", l}, {"N-", nm}}, [p, l, nm] {
                                           const std::size_t k = l.size();
                                           BiLaurent rhs = chi_supernomial(p, bumped(l, k - 1), nm - 1);
                                           rhs += chi_supernomial(p, l, nm - p).shifted(Rational(2 * nm - p, 2), -1);
                                           return compare(chi_supernomial(p, bumped(l, k), nm), rhs);
                                       }});
                    return;
                }
                for (long x = 0; x <= std::min(lmax, 2L); ++x) {
                    l[i] = x;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
        }

    // rec2 on the fermionic side: a trailing h-entry equal to N_+ + N_- drops out.
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (int d = 1; d <= 2 * p - 3; ++d)
            for (long s = 0; s <= std::min(lmax, 4L); ++s)
                for (long nm = -p; nm <= s + p; ++nm)
                    for_each_monotone(d - 1, s, [&](const std::vector<long> &h) {
                        const SiteVector small = SiteVector::make(p, s - nm, nm, h);
                        if (!l_nonnegative(small))
                            return;
                        std::vector<long> hb = h;
                        hb.push_back(s);
                        const SiteVector big = SiteVector::make(p, s - nm, nm, hb);
                        out.push_back({json{{"check", "rec2"}, {"p", p}, {"d", d}, {"N", site_json(big)}},
                                       [small, big] { return compare(chi_fermionic(big), chi_fermionic(small)); }});
                    });

    // Main recurrence on random linear/charge data over the standard quadratic form.
    std::mt19937_64 rng(c.seed);
    long made = 0, attempts = 0;
    while (made < *c.random_cases && attempts < 100 * *c.random_cases) {
        ++attempts;
        std::uniform_int_distribution<int> pick_p(*c.p_lo, *c.p_hi);
        const int p = pick_p(rng);
        const int d = std::uniform_int_distribution<int>(0, 2 * p - 3)(rng);
        const long s = std::uniform_int_distribution<long>(0, 4)(rng);
        const long nm = std::uniform_int_distribution<long>(-p, s + p)(rng);
        std::vector<long> h(static_cast<std::size_t>(d));
        for (auto &x : h)
            x = std::uniform_int_distribution<long>(0, s)(rng);
        std::sort(h.begin(), h.end());
        const SiteVector n = SiteVector::make(p, s - nm, nm, h);
        const IntMatrix a = build_matrix_A(p, d);
        const int idx = std::uniform_int_distribution<int>(0, d + 1)(rng);
        std::vector<long> c1 = n.coords(), c2 = n.coords();
        c1[idx] -= 1;
        for (std::size_t j = 0; j < c2.size(); ++j)
            c2[j] -= a[idx][j];
        auto as_site = [&](const std::vector<long> &v) {
            return SiteVector::make(p, v[0], v[1], std::vector<long>(v.begin() + 2, v.end()));
        };
        const SiteVector n1 = as_site(c1), n2 = as_site(c2);
        if (!l_nonnegative(n) || !l_nonnegative(n1) || !l_nonnegative(n2))
            continue;
        QuadraticData qd{a, {}, {}, {}};
        for (int j = 0; j < d + 2; ++j) {
            qd.u.push_back(std::uniform_int_distribution<long>(-2, 2)(rng));
            qd.v.push_back(Rational(std::uniform_int_distribution<long>(-4, 4)(rng), 2));
        }
        qd.normalize();
        ++made;
        json params{{"check", "main-recurrence"}, {"p", p},       {"d", d}, {"N", n.coords()},
                    {"a", idx},                  {"u", qd.u}};
        std::vector<std::string> vs;
        for (const auto &x : qd.v)
            vs.push_back(x.to_string());
        params["v"] = vs;
        out.push_back({params, [n, n1, n2, qd, idx] {
                           const BiLaurent lhs = chi_general(qd, n.coords(), *support_box(n).box);
                           BiLaurent rhs = chi_general(qd, n1.coords(), *support_box(n1).box);
                           const Rational e = Rational(n.coords()[idx]) + qd.v[idx] - Rational(qd.a[idx][idx], 2);
                           rhs += chi_general(qd, n2.coords(), *support_box(n2).box).shifted(e, qd.u[idx]);
                           return compare(lhs, rhs);
                       }});
    }
    return out;
}

std::vector<Case> cases_char_eq(const SweepConfig &c)
{
    std::vector<Case> out;
    coinv_sweep(c, [&](const SiteVector &n) {
        for (int r = 0; r < n.p; ++r) {
            out.push_back({json{{"p", n.p}, {"r", r}, {"N", site_json(n)}}, [n, r] {
                               const CharacterValue a = char_coinv_fermionic(n.p, r, n);
                               const CharacterValue b = char_coinv_supernomial(n.p, r, n);
                               if (a == b)
                                   return CaseOutcome{};
                               return fail_with(a.normalized().poly, b.normalized().poly, json{{"check", "fermionic-vs-supernomial"}});
                           }});
            const long s = n.n_plus + n.n_minus;
            for (int d = 0; d < n.p - 1; ++d) {
                if (!std::all_of(n.n_h.begin() + d, n.n_h.end(), [s](long x) { return x == s; }))
                    continue;
                const SiteVector small =
                    SiteVector::make(n.p, n.n_plus, n.n_minus, std::vector<long>(n.n_h.begin(), n.n_h.begin() + d));
                out.push_back({json{{"check", "reduced-d"}, {"p", n.p}, {"r", r}, {"N", site_json(small)}, {"d", d}},
                               [n, small, r] {
                                   const CharacterValue a = char_coinv_fermionic(n.p, r, small);
                                   const CharacterValue b = char_coinv_fermionic(n.p, r, n);
                                   if (a == b)
                                       return CaseOutcome{};
                                   return fail_with(a.normalized().poly, b.normalized().poly, json::object());
                               }});
            }
        }
    });
    return out;
}

std::vector<Case> cases_flow(const SweepConfig &c)
{
    std::vector<Case> out;
    coinv_sweep(c, [&](const SiteVector &n) {
        for (int r = 0; r < n.p; ++r)
            out.push_back({json{{"p", n.p}, {"r", r}, {"N", site_json(n)}}, [n, r] {
                               FlowCheck f = spectral_flow_check(n.p, r, n);
                               CaseOutcome o;
                               o.ok = f.pass;
                               if (!o.ok) {
                                   o.lhs = std::move(f.lhs);
                                   o.rhs = std::move(f.rhs);
                               }
                               return o;
                           }});
    });
    return out;
}

std::vector<Case> cases_dims(const SweepConfig &c)
{
    std::vector<Case> out;
    const bool dual = c.dual_labels;
    coinv_sweep(c, [&](const SiteVector &n) {
        for (int r = 0; r < n.p; ++r) {
            const int label = dual ? static_cast<int>(mod_floor(-r, n.p)) : r;
            out.push_back({json{{"p", n.p}, {"r", r}, {"N", site_json(n)}, {"label", label}}, [n, r, label] {
                               const BigInt chi = eval_q1_z1(char_coinv_supernomial(n.p, r, n).poly);
                               const BigInt sup = d_via_supernomial(n, r);
                               const BigInt dv = d_vector(n.p, decompose_N(n)).dims[static_cast<std::size_t>(label)];
                               if (chi != sup)
                                   return fail_with(constant(chi), constant(sup), json{{"check", "character-vs-supernomial"}});
                               if (sup != dv)
                                   return fail_with(constant(sup), constant(dv), json{{"check", "supernomial-vs-dvector"}});
                               if (const auto cf = closed_form_dim(n.p, l_vector(n)); cf && *cf != dv)
                                   return fail_with(constant(dv), constant(*cf), json{{"check", "dvector-vs-closed-form"}});
                               return CaseOutcome{};
                           }});
        }
    });
    return out;
}

std::vector<Case> cases_stab(const SweepConfig &c)
{
    std::vector<Case> out;
    const long dq = *c.max_q, zw = *c.zwin;
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (int r = 0; r < p; ++r) {
            const long threshold = 2 * (dq + zw + p);
            for (long t : {threshold, threshold + 1}) {
                std::vector<SiteVector> sites{SiteVector::make(p, t, t, {})};
                if (p > 1)
                    sites.push_back(SiteVector::make(p, t, t, std::vector<long>(static_cast<std::size_t>(p - 1), 2 * t)));
                for (const auto &n : sites)
                    out.push_back({json{{"check", "stabilization"}, {"p", p}, {"r", r}, {"N", site_json(n)}},
                                   [n, r, dq, zw] {
                                       const CharacterValue a = truncate(char_coinv_fermionic(n.p, r, n), dq, zw);
                                       const CharacterValue b = char_rep(n.p, r, dq, zw);
                                       if (a == b)
                                           return CaseOutcome{};
                                       return fail_with(a.normalized().poly, b.normalized().poly, json::object());
                                   }});
            }
            for (int d = 0; d <= p - 1; ++d)
                out.push_back({json{{"check", "gordon"}, {"p", p}, {"r", r}, {"d", d}}, [p, r, d, dq, zw] {
                                   return compare(chi_gordon_character(p, d, r, dq, zw), char_rep(p, r, dq, zw).poly);
                               }});
        }
    return out;
}

std::vector<Case> cases_elementary(const SweepConfig &c)
{
    std::vector<Case> out;
    for (int p = *c.p_lo; p <= *c.p_hi; ++p)
        for (long i = 0; i <= p; ++i)
            for (long j = -2L * p; j <= 2L * p; ++j)
                out.push_back({json{{"p", p}, {"i", i}, {"j", j}}, [p, i, j] {
                                   const FusionVector e = elementary_dims(p, {i, j});
                                   FusionVector brute{p, std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(0))};
                                   for (int r = 0; r < p; ++r)
                                       for (long n = -(std::abs(j) + 2L * p); n <= std::abs(j) + 2L * p; ++n) {
                                           const long x = p * n + j + r;
                                           if (x >= 0 && x <= i)
                                               brute.dims[r] += 1;
                                       }
                                   auto as_poly = [](const FusionVector &f) {
                                       BiLaurent b;
                                       for (std::size_t r = 0; r < f.dims.size(); ++r)
                                           b.add_term(Rational(0), static_cast<long>(r), f.dims[r]);
                                       return b;
                                   };
                                   if (e != brute)
                                       return fail_with(as_poly(e), as_poly(brute), json{{"check", "brute-force"}});
                                   const FusionVector single = d_vector(p, {{i, j}});
                                   if (e != single)
                                       return fail_with(as_poly(e), as_poly(single), json{{"check", "d-vector"}});
                                   for (long i2 = 0; i2 <= p; ++i2)
                                       for (long j2 = -2L * p; j2 <= 2L * p; ++j2) {
                                           const FusionVector f = fuse(e, elementary_dims(p, {i2, j2}));
                                           const FusionVector g = d_vector(p, {{i, j}, {i2, j2}});
                                           if (f != g)
                                               return fail_with(as_poly(f), as_poly(g),
                                                                json{{"check", "fusion-product"}, {"i2", i2}, {"j2", j2}});
                                       }
                                   return CaseOutcome{};
                               }});
    return out;
}

struct Defaults
{
    int p_lo, p_hi, p_min;
    long nmax, range, lmax, amax, kmax, max_q, zwin, random_cases;
};

Defaults identity_defaults(const std::string &id)
{
    Defaults d{2, 3, 2, 4, 5, 4, 10, 3, 6, 2, 200};
    if (id == "tb" || id == "ta") {
        d.p_hi = 4;
        d.nmax = 5;
    } else if (id == "pascal") {
        d.range = 8;
    } else if (id == "elementary") {
        d.p_lo = 1;
        d.p_hi = 5;
        d.p_min = 1;
    }
    return d;
}

} // namespace

const std::vector<std::string> &identity_names()
{
    static const std::vector<std::string> names{"pascal", "rdc",  "knuth", "ta",   "tb",         "rec",
                                                "char-eq", "flow", "dims",  "stab", "elementary"};
    return names;
}

SweepConfig SweepConfig::resolved() const
{
    if (std::find(identity_names().begin(), identity_names().end(), identity) == identity_names().end())
        throw ConfigError("unknown identity '" + identity + "'");
    const Defaults d = identity_defaults(identity);
    SweepConfig c = *this;
    c.p_lo = p_lo.value_or(d.p_lo);
    c.p_hi = p_hi.value_or(p_lo && !p_hi ? *p_lo : d.p_hi);
    c.nmax = nmax.value_or(d.nmax);
    c.range = range.value_or(d.range);
    c.lmax = lmax.value_or(d.lmax);
    c.amax = amax.value_or(d.amax);
    c.kmax = kmax.value_or(d.kmax);
    c.max_q = max_q.value_or(d.max_q);
    c.zwin = zwin.value_or(d.zwin);
    c.random_cases = random_cases.value_or(d.random_cases);
    if (c.jobs == 0)
        c.jobs = 1;
    if (*c.p_lo < d.p_min || *c.p_hi < *c.p_lo)
        throw ConfigError("p range must be nonempty with p >= " + std::to_string(d.p_min));
    if (*c.p_hi > 12)
        throw ConfigError("p range too large (max 12)");
    for (auto [name, v] : {std::pair{"nmax", *c.nmax}, {"range", *c.range}, {"lmax", *c.lmax}, {"amax", *c.amax},
                           {"max-q", *c.max_q}, {"zwin", *c.zwin}, {"random", *c.random_cases}})
        if (v < 0)
            throw ConfigError(std::string(name) + " must be nonnegative");
    if (*c.kmax < 1)
        throw ConfigError("kmax must be >= 1");
    return c;
}

std::vector<Case> build_cases(const SweepConfig &cfg)
{
    const SweepConfig c = cfg.resolved();
    const std::string &id = c.identity;
    if (id == "tb")
        return cases_tb(c, false);
    if (id == "ta")
        return cases_tb(c, true);
    if (id == "pascal")
        return cases_pascal(c);
    if (id == "rdc")
        return cases_rdc(c);
    if (id == "knuth")
        return cases_knuth(c);
    if (id == "rec")
        return cases_rec(c);
    if (id == "char-eq")
        return cases_char_eq(c);
    if (id == "flow")
        return cases_flow(c);
    if (id == "dims")
        return cases_dims(c);
    if (id == "stab")
        return cases_stab(c);
    return cases_elementary(c);
}

IdentityReport run_cases(const std::string &identity, const std::vector<Case> &cases, const SweepConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<CaseOutcome> results(cases.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                results[i] = cases[i].run();
                if (cfg.inject_fault && i % 7 == 3) {
                    results[i].ok = false;
                    if (results[i].lhs.is_zero() && results[i].rhs.is_zero())
                        results[i].rhs = BiLaurent::one();
                    results[i].detail["injected"] = true;
                }
            } catch (...) {
                std::lock_guard lk(error_mu);
                if (!error)
                    error = std::current_exception();
                next = cases.size();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cases.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);

    IdentityReport rep;
    rep.identity = identity;
    rep.cases = static_cast<long>(cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (results[i].ok)
            continue;
        json params = cases[i].params;
        for (auto &[k, v] : results[i].detail.items())
            params[k] = v;
        rep.failures.push_back({std::move(params), std::move(results[i].lhs), std::move(results[i].rhs)});
    }
    rep.ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return rep;
}

IdentityReport run_identity(const SweepConfig &cfg)
{
    const SweepConfig c = cfg.resolved();
    return run_cases(c.identity, build_cases(c), c);
}

json report_to_json(const IdentityReport &r, bool with_time)
{
    json fails = json::array();
    for (const auto &f : r.failures)
        fails.push_back(json{{"params", f.params}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
    json j{{"identity", r.identity}, {"cases", r.cases}, {"failures", std::move(fails)}};
    if (with_time)
        j["ms"] = r.ms;
    return j;
}

const json &report_schema()
{
    static const json schema = json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "https://qsupernomial.invalid/report.schema.json",
  "title": "Identity verification report",
  "type": "object",
  "required": ["identity", "cases", "failures"],
  "additionalProperties": false,
  "properties": {
    "identity": {"type": "string"},
    "cases": {"type": "integer", "minimum": 0},
    "failures": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["params", "lhs", "rhs"],
        "additionalProperties": false,
        "properties": {
          "params": {"type": "object"},
          "lhs": {"$ref": "#/$defs/poly"},
          "rhs": {"$ref": "#/$defs/poly"}
        }
      }
    },
    "ms": {"type": "integer", "minimum": 0}
  },
  "$defs": {
    "poly": {
      "type": "object",
      "required": ["terms"],
      "additionalProperties": false,
      "properties": {
        "terms": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["q", "z", "c"],
            "additionalProperties": false,
            "properties": {
              "q": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
              "z": {"type": "integer"},
              "c": {"type": "string", "pattern": "^-?[0-9]+$"}
            }
          }
        }
      }
    }
  }
})");
    return schema;
}

} // namespace qsn
