#ifndef GROVENT_SWEEP_HPP
#define GROVENT_SWEEP_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grovent/geometric.hpp"
#include "grovent/report.hpp"

namespace grovent {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidConfig = 1,
    kExitValidationFailure = 2,
    kExitIoError = 3,
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Command { Curve, Table1, Ghz, WState, Dicke, ClosedForms, Validate };
enum class OutputFormat { Csv, Json, Svg };

/// Marked-state selection conventions.
///   AllZeros      {0...0}
///   ZerosAndOnes  {0...0, 1...1}
///   PaperM        {0...0} for m = 1, {0...0, 1...1} for m = 2, plus the
///                 first m-2 balanced patterns (n/2 ones) in ascending order
///   WeightOne     the n single-excitation patterns (m = n)
///   Explicit      a user-supplied list
enum class MarkedKind { AllZeros, ZerosAndOnes, PaperM, WeightOne, Explicit };

struct MarkedSpec {
    MarkedKind kind = MarkedKind::AllZeros;
    std::vector<Pattern> patterns;  // Explicit only
};

/// "all-zeros" | "zeros-ones" | "paper-m" | "weight-one" | "explicit:<list>".
/// List entries are decimal or 0b-prefixed binary.
MarkedSpec parse_marked_spec(const std::string& text);
std::string to_string(const MarkedSpec& spec);

/// m = 0 means "implied by the convention" (1, 2, n, or the list size).
/// Throws ConfigError naming the violated precondition.
std::vector<Pattern> build_marked_set(const MarkedSpec& spec, int n, int m);

struct SweepConfig {
    Command command = Command::Curve;
    int n = 0;  // 0: command default (10, or 12 for wstate, 6 for validate)
    int m = 0;
    MarkedSpec marked;
    AngleConvention angle = AngleConvention::PaperStep;
    OutputFormat format = OutputFormat::Csv;
    std::string out;  // empty: stdout
    double tol = kDefaultTolerance;
    std::uint64_t seed = 20240611;
    int restarts = 16;
    int max_m = 4;                             // validate
    std::vector<int> table_ms{1, 2, 3, 5, 10};  // table1
};

Command command_from_string(const std::string& name);
std::string to_string(Command command);
OutputFormat output_format_from_string(const std::string& name);

/// Per-iteration table: r, theta_r, E, phi_star, bound, concurrence, success_prob.
Table curve_table(const EntanglementCurve& curve);

/// Executes one command and writes its output to config.out (or `out`).
/// Summaries and diagnostics go to `log`. Returns an ExitCode.
int run_command(const SweepConfig& config, std::ostream& out, std::ostream& log);

}  // namespace grovent

#endif
