#ifndef QSN_VERIFY_HPP
#define QSN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsn/bilaurent.hpp"

namespace qsn
{

/// Raised for invalid sweep configurations (CLI exit code 2).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters of a verification sweep. Unset optionals take per-identity
/// defaults (see identity_defaults).
struct SweepConfig
{
    std::string identity;
    std::optional<int> p_lo, p_hi;
    std::optional<long> nmax;  ///< bound on N_+ + N_- (tb, ta) or on every entry of N (char-eq, flow, dims)
    std::optional<long> range; ///< index window half-width (pascal, rdc, knuth)
    std::optional<long> lmax;  ///< bound on L entries (rec)
    std::optional<long> amax;  ///< |a| bound (rec)
    std::optional<long> kmax;  ///< longest L vector (rec)
    std::optional<long> max_q; ///< q cutoff (stab)
    std::optional<long> zwin;  ///< z window (stab)
    std::optional<long> random_cases; ///< randomized main-recurrence cases (rec)
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool dual_labels = false;  ///< dims: compare d_vector at label -r mod p
    bool inject_fault = false; ///< perturbs one side on every 7th case (harness self-test)

    /// Fills unset fields and checks ranges. Throws ConfigError.
    SweepConfig resolved() const;
};

struct Failure
{
    nlohmann::ordered_json params;
    BiLaurent lhs;
    BiLaurent rhs;
};

struct IdentityReport
{
    std::string identity;
    long cases = 0;
    std::vector<Failure> failures;
    long ms = 0;
};

/// Outcome of a single case. detail is merged into the failure parameters.
struct CaseOutcome
{
    bool ok = true;
    BiLaurent lhs;
    BiLaurent rhs;
    nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

struct Case
{
    nlohmann::ordered_json params;
    std::function<CaseOutcome()> run;
};

/// Identity names accepted by run_identity, in the order "all" runs them.
const std::vector<std::string> &identity_names();

/// Builds the ordered case list of an identity.
std::vector<Case> build_cases(const SweepConfig &cfg);

/// Evaluates cases on cfg.jobs threads; failures are kept in case order.
IdentityReport run_cases(const std::string &identity, const std::vector<Case> &cases, const SweepConfig &cfg);

/// build_cases followed by run_cases. Throws ConfigError on bad configs.
IdentityReport run_identity(const SweepConfig &cfg);

/// {"identity","cases","failures":[{"params","lhs","rhs"}],"ms"}.
nlohmann::ordered_json report_to_json(const IdentityReport &r, bool with_time = true);

/// The JSON schema reports conform to.
const nlohmann::ordered_json &report_schema();

} // namespace qsn

#endif
