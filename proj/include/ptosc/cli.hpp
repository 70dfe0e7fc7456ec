#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptosc/oracle.hpp"
#include "ptosc/probabilities.hpp"

namespace ptosc::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitDomainError = 3;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "v", "a,b,c" or "min:max:steps" (inclusive, steps >= 2, min < max).
std::vector<double> parse_values(std::string_view text);

/// Parses a comma-separated method list, e.g. "trace,closed_form".
std::vector<Method> parse_methods(std::string_view text);

struct RawParams {
    double m1_sq{};
    double m2_sq{};
    double mu_sq{};
    double p{};
};

/// "m1sq,m2sq,musq,p"
RawParams parse_raw_params(std::string_view text);

/// Flat `key = value` lines; '#' starts a comment. Keys are long option names
/// without the leading dashes.
std::map<std::string, std::string> parse_config_text(std::string_view text);

enum class Format { csv, json };

struct SweepConfig {
    std::vector<double> etas;
    std::vector<double> phases;
    double t0{0.0};
    double ratio{0.5};
    double mass_sum{1.0};
    std::vector<Method> methods{Method::closed_form, Method::hermitian};
    Format format{Format::csv};
    std::string output{"stdout"};
    std::optional<RawParams> raw;
    std::optional<double> tolerance;
};

using Cell = std::variant<double, std::string, bool, std::size_t>;

/// Rows of optional cells under a fixed header. An empty cell is written as an
/// empty CSV field and as JSON null.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<Cell>>> rows;
};

/// printf("%.17g") equivalent with a '.' separator regardless of locale.
std::string format_double(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
/// Fixed-width text rendering for terminals.
void write_text(const Table& table, std::ostream& out);

/// Columns: eta, phase, then per requested method in the fixed order
/// pt_survival, pt_transition, trace_survival, trace_transition,
/// herm_survival, herm_transition, naive_transition.
Table cmd_probabilities(const SweepConfig& config);

/// Columns: eta, pt_m_plus_sq, pt_m_minus_sq, herm_m_plus_sq, herm_m_minus_sq,
/// all divided by m1^2 + m2^2. PT cells are empty for eta > 1.
Table cmd_masses(const SweepConfig& config);

/// Columns: eta, phase, r, r_ratio.
Table cmd_cardioid(const SweepConfig& config);

struct ValidateResult {
    std::vector<oracle::OracleReport> reports;
    Table table;
    int exit_code{kExitSuccess};
};

ValidateResult cmd_validate(const SweepConfig& config);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptosc::cli
