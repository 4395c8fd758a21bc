#include "grovent/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "grovent/closed_forms.hpp"
#include "grovent/product_oracle.hpp"
#include "grovent/statevector.hpp"

namespace grovent {

namespace {

constexpr double kAmplitudeTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-6;

// Reference n = 10 iteration table: M -> (r_opt, peak position / r_opt).
const std::map<int, std::pair<int, double>> kReferenceTable{
    {1, {24, 0.5}}, {2, {17, 0.647}}, {3, {14, 0.714}}, {5, {11, 0.727}}, {10, {7, 1.0}},
};

Pattern parse_pattern(const std::string& token)
{
    std::size_t used = 0;
    Pattern value = 0;
    try {
        if (token.rfind("0b", 0) == 0) {
            value = std::stoull(token.substr(2), &used, 2);
            used += 2;
        } else {
            value = std::stoull(token, &used, 10);
        }
    } catch (const std::exception&) {
        throw ConfigError("invalid marked pattern '" + token + "'");
    }
    if (used != token.size() || token.empty() || token.front() == '-') {
        throw ConfigError("invalid marked pattern '" + token + "'");
    }
    return value;
}

void require_m(int m, int expected, const char* convention)
{
    if (m != 0 && m != expected) {
        throw ConfigError(std::string(convention) + " requires m = " + std::to_string(expected) + ", got " +
                          std::to_string(m));
    }
}

// next larger integer with the same popcount
Pattern next_same_weight(Pattern v)
{
    const Pattern t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

int resolve_n(const SweepConfig& config)
{
    if (config.n != 0) return config.n;
    switch (config.command) {
    case Command::WState: return 12;
    case Command::Validate: return 6;
    default: return 10;
    }
}

std::string command_title(const GroverInstance& instance, const std::string& marked)
{
    std::ostringstream os;
    os << "Geometric entanglement per iteration: n=" << instance.qubits() << ", M=" << instance.marked_count()
       << ", marked=" << marked << ", angle=" << to_string(instance.convention());
    return os.str();
}

nlohmann::ordered_json config_json(const SweepConfig& config, int n, const std::vector<Pattern>& marked)
{
    nlohmann::ordered_json j;
    j["command"] = to_string(config.command);
    j["n"] = n;
    j["m"] = marked.empty() ? config.m : static_cast<int>(marked.size());
    j["marked"] = to_string(config.marked);
    if (!marked.empty()) j["marked_patterns"] = marked;
    j["angle"] = to_string(config.angle);
    j["tol"] = config.tol;
    j["seed"] = config.seed;
    j["restarts"] = config.restarts;
    return j;
}

struct Output {
    Table table;
    nlohmann::ordered_json config;
    std::string title;
    std::string x_column;
    std::vector<PlotSeries> series;  // empty: not plottable
};

Output curve_output(const SweepConfig& config, int n, const MarkedSpec& spec, int m, std::ostream& log)
{
    const auto marked = build_marked_set(spec, n, m);
    const GroverInstance instance(n, marked, config.angle);
    const auto curve = entanglement_curve(instance, config.tol);
    const auto peak = e_max(curve);

    log << "# r_opt=" << r_opt(instance) << " r_star=" << peak.r_star << " E_max=" << format_number(peak.E_max)
        << " E_final=" << format_number(curve.records.back().E)
        << " ansatz_exact=" << (curve.ansatz_exact ? "true" : "false") << '\n';
    if (!curve.ansatz_exact) {
        log << "# note: marked set is not permutation-symmetric under any bit flip; E is an upper bound on the "
               "geometric entanglement\n";
    }

    SweepConfig effective = config;
    effective.marked = spec;
    Output out{curve_table(curve), config_json(effective, n, marked), command_title(instance, to_string(spec)), "r",
               {{"E", "geometric entanglement E", "#1f4e9c", false},
                {"concurrence", "concurrence (scaled to peak 1)", "#d9730d", true}}};
    return out;
}

Output table1_output(const SweepConfig& config, int n, std::ostream& log)
{
    Output out;
    out.table.columns = {"M", "r_opt", "peak_r", "ratio", "E_max", "reference_r_opt", "reference_ratio"};
    for (int m : config.table_ms) {
        const auto marked = build_marked_set({MarkedKind::PaperM, {}}, n, m);
        const GroverInstance instance(n, marked, config.angle);
        const auto curve = entanglement_curve(instance, config.tol);
        const auto peak = e_max(curve);
        const int ropt = r_opt(instance);
        const double ratio = ropt > 0 ? double(peak.r_star) / ropt : std::nan("");

        Cell ref_r = std::string(), ref_ratio = std::string();
        if (const auto it = kReferenceTable.find(m); n == 10 && it != kReferenceTable.end()) {
            ref_r = std::int64_t(it->second.first);
            ref_ratio = it->second.second;
            if (it->second.first != ropt) {
                log << "# M=" << m << ": computed r_opt=" << ropt << " differs from reference " << it->second.first
                    << " (closest integer to " << format_number((std::numbers::pi / step_angle(instance) - 1) / 2)
                    << ")\n";
            }
        }
        out.table.add_row({std::int64_t(m), std::int64_t(ropt), std::int64_t(peak.r_star), ratio, peak.E_max, ref_r,
                           ref_ratio});
    }
    out.config = config_json(config, n, {});
    out.config["marked"] = "paper-m";
    out.config["ms"] = config.table_ms;
    return out;
}

Output dicke_output(const SweepConfig& config, int n)
{
    Output out;
    out.table.columns = {"n", "k", "E_closed", "E_numeric", "abs_diff"};
    for (int k = 0; k <= n; ++k) {
        const double closed = dicke_entanglement({n, k});
        const auto best = max_overlap(OverlapCoefficients::target_state(dicke_profile({n, k})), config.tol);
        const double numeric = 1.0 - best.overlap_max * best.overlap_max;
        out.table.add_row({std::int64_t(n), std::int64_t(k), closed, numeric, std::abs(closed - numeric)});
    }
    out.config = config_json(config, n, {});
    out.config.erase("marked");
    return out;
}

Output closed_forms_output(const SweepConfig& config, int n_max)
{
    Output out;
    out.table.columns = {"n", "E_ghz", "E_w", "E_w_numeric", "k_half", "E_dicke_half", "E_dicke_half_numeric"};
    auto numeric = [&](const MarkedProfile& profile) {
        const auto best = max_overlap(OverlapCoefficients::target_state(profile), config.tol);
        return 1.0 - best.overlap_max * best.overlap_max;
    };
    for (int n = 2; n <= n_max; ++n) {
        const int k = n / 2;
        out.table.add_row({std::int64_t(n), ghz_entanglement(n), w_entanglement(n), numeric(w_profile(n)),
                           std::int64_t(k), dicke_entanglement({n, k}), numeric(dicke_profile({n, k}))});
    }
    out.config = config_json(config, n_max, {});
    out.config.erase("marked");
    return out;
}

struct ValidationCase {
    std::string label;
    std::vector<Pattern> marked;
};

std::vector<ValidationCase> validation_cases(int n, int max_m)
{
    std::vector<ValidationCase> cases;
    const double dim = std::ldexp(1.0, n);
    for (int m = 1; m <= max_m; ++m) {
        if (m >= dim) break;
        try {
            cases.push_back({m == 1 ? "all-zeros" : m == 2 ? "zeros-ones" : "paper-m",
                             build_marked_set({MarkedKind::PaperM, {}}, n, m)});
        } catch (const ConfigError&) {
            // paper-m with m >= 3 needs an even qubit count
        }
    }
    cases.push_back({"weight-one", build_marked_set({MarkedKind::WeightOne, {}}, n, n)});
    return cases;
}

Output validate_output(const SweepConfig& config, int n_max, bool& all_passed, std::ostream& log)
{
    Output out;
    out.table.columns = {"n",          "M",         "marked",       "r",
                         "amp_err",    "overlap_err", "E_symmetric", "E_general",
                         "gap",        "ansatz_exact", "paperstep_amp_dev", "status"};
    OracleOptions options;
    options.restarts = config.restarts;
    options.seed = config.seed;

    std::size_t checks = 0, failures = 0;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& vc : validation_cases(n, config.max_m)) {
            const GroverInstance instance(n, vc.marked, AngleConvention::ExactRotation);
            const bool paper_ok = 4 * vc.marked.size() <= (std::size_t{1} << n);
            const auto raw_profile = MarkedProfile::from_patterns(n, vc.marked);
            const bool exact = canonical_marking(instance).ansatz_exact;

            for (int r = 0; r <= r_opt(instance); ++r) {
                const auto dense = run(n, vc.marked, r);
                const auto sub = subspace_state(instance, r);
                const auto model = from_subspace(instance, sub);
                double amp_err = 0.0;
                for (std::size_t i = 0; i < dense.size(); ++i) {
                    amp_err = std::max(amp_err, std::abs(dense[i] - model[i]));
                }
                const auto raw = OverlapCoefficients::from_state(sub, raw_profile);
                double overlap_err = 0.0;
                for (int t = 0; t <= 8; ++t) {
                    const double phi = std::numbers::pi * t / 8;
                    overlap_err = std::max(overlap_err, std::abs(dense_overlap(dense, phi) - overlap(phi, raw)));
                }
                const double e_sym = entanglement_at(instance, r, config.tol).E;
                const double e_gen = general_geometric_entanglement(dense, options).E;
                const double gap = e_gen - e_sym;

                Cell paper_dev = std::string();
                if (paper_ok) {
                    const auto paper = instance.with_convention(AngleConvention::PaperStep);
                    const auto approx = from_subspace(paper, subspace_state(paper, r));
                    double dev = 0.0;
                    for (std::size_t i = 0; i < dense.size(); ++i) dev = std::max(dev, std::abs(dense[i] - approx[i]));
                    paper_dev = dev;
                }

                const bool oracle1 = amp_err <= kAmplitudeTolerance && overlap_err <= kAmplitudeTolerance;
                const bool oracle2 = exact ? std::abs(gap) <= kOracleTolerance : gap <= kOracleTolerance;
                std::string status = !oracle1 ? "FAIL-dense" : !oracle2 ? "FAIL-product" : exact ? "match" : "upper-bound";
                ++checks;
                if (!(oracle1 && oracle2)) ++failures;
                out.table.add_row({std::int64_t(n), std::int64_t(vc.marked.size()), vc.label, std::int64_t(r),
                                   amp_err, overlap_err, e_sym, e_gen, gap, exact, paper_dev, status});
            }
        }
    }
    all_passed = failures == 0;
    log << "# validate: " << (checks - failures) << "/" << checks << " checks passed\n";
    out.config = config_json(config, n_max, {});
    out.config.erase("marked");
    out.config["angle"] = "exact";
    out.config["max_m"] = config.max_m;
    return out;
}

int emit(const SweepConfig& config, const Output& output, std::ostream& stdout_stream, std::ostream& log)
{
    if (config.format == OutputFormat::Svg && output.series.empty()) {
        log << "error: svg output is only available for curve commands (curve, ghz, wstate)\n";
        return kExitInvalidConfig;
    }
    std::ofstream file;
    std::ostream* os = &stdout_stream;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            log << "error: cannot open output file '" << config.out << "'\n";
            return kExitIoError;
        }
        os = &file;
    }
    switch (config.format) {
    case OutputFormat::Csv: write_csv(*os, output.table); break;
    case OutputFormat::Json: write_json(*os, output.config, output.table); break;
    case OutputFormat::Svg: write_svg(*os, output.title, output.table, output.x_column, output.series); break;
    }
    os->flush();
    if (!*os) {
        log << "error: failed writing output\n";
        return kExitIoError;
    }
    return kExitOk;
}

}  // namespace

MarkedSpec parse_marked_spec(const std::string& text)
{
    if (text == "all-zeros") return {MarkedKind::AllZeros, {}};
    if (text == "zeros-ones") return {MarkedKind::ZerosAndOnes, {}};
    if (text == "paper-m") return {MarkedKind::PaperM, {}};
    if (text == "weight-one") return {MarkedKind::WeightOne, {}};
    if (text.rfind("explicit:", 0) == 0) {
        MarkedSpec spec{MarkedKind::Explicit, {}};
        std::stringstream list(text.substr(9));
        for (std::string token; std::getline(list, token, ',');) spec.patterns.push_back(parse_pattern(token));
        if (spec.patterns.empty()) throw ConfigError("explicit marked list is empty");
        return spec;
    }
    throw ConfigError("unknown marked convention '" + text +
                      "' (expected all-zeros|zeros-ones|paper-m|weight-one|explicit:<list>)");
}

std::string to_string(const MarkedSpec& spec)
{
    switch (spec.kind) {
    case MarkedKind::AllZeros: return "all-zeros";
    case MarkedKind::ZerosAndOnes: return "zeros-ones";
    case MarkedKind::PaperM: return "paper-m";
    case MarkedKind::WeightOne: return "weight-one";
    case MarkedKind::Explicit: break;
    }
    std::string s = "explicit:";
    for (std::size_t i = 0; i < spec.patterns.size(); ++i) s += (i ? "," : "") + std::to_string(spec.patterns[i]);
    return s;
}

std::vector<Pattern> build_marked_set(const MarkedSpec& spec, int n, int m)
{
    if (n < 2 || n > kMaxQubits) {
        throw ConfigError("n must be in [2, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n));
    }
    if (m < 0) throw ConfigError("m must be non-negative");
    const Pattern all_ones = (Pattern{1} << n) - 1;

    switch (spec.kind) {
    case MarkedKind::AllZeros:
        require_m(m, 1, "all-zeros");
        return {0};
    case MarkedKind::ZerosAndOnes:
        require_m(m, 2, "zeros-ones");
        return {0, all_ones};
    case MarkedKind::WeightOne: {
        require_m(m, n, "weight-one");
        std::vector<Pattern> out;
        for (int j = 0; j < n; ++j) out.push_back(Pattern{1} << j);
        return out;
    }
    case MarkedKind::PaperM: {
        if (m < 1) throw ConfigError("paper-m requires an explicit m >= 1");
        if (m == 1) return {0};
        std::vector<Pattern> out{0, all_ones};
        if (m == 2) return out;
        if (n % 2 != 0) throw ConfigError("paper-m with m >= 3 requires an even qubit count, got n=" + std::to_string(n));
        if (double(m - 2) > binomial(n, n / 2)) {
            throw ConfigError("paper-m needs m - 2 <= C(n, n/2) balanced patterns; m=" + std::to_string(m) +
                              " is too large for n=" + std::to_string(n));
        }
        Pattern p = (Pattern{1} << (n / 2)) - 1;
        for (int i = 0; i < m - 2; ++i, p = next_same_weight(p)) out.push_back(p);
        return out;
    }
    case MarkedKind::Explicit: {
        require_m(m, static_cast<int>(spec.patterns.size()), "explicit list");
        for (Pattern p : spec.patterns) {
            if (p > all_ones) throw ConfigError("explicit pattern " + std::to_string(p) + " out of range for n=" + std::to_string(n));
        }
        auto out = spec.patterns;
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError("explicit patterns must be distinct");
        return out;
    }
    }
    throw ConfigError("unhandled marked convention");
}

Command command_from_string(const std::string& name)
{
    static const std::map<std::string, Command> names{
        {"curve", Command::Curve},   {"table1", Command::Table1},          {"ghz", Command::Ghz},
        {"wstate", Command::WState}, {"dicke", Command::Dicke},            {"closedforms", Command::ClosedForms},
        {"validate", Command::Validate},
    };
    const auto it = names.find(name);
    if (it == names.end()) throw ConfigError("unknown command '" + name + "'");
    return it->second;
}

std::string to_string(Command command)
{
    switch (command) {
    case Command::Curve: return "curve";
    case Command::Table1: return "table1";
    case Command::Ghz: return "ghz";
    case Command::WState: return "wstate";
    case Command::Dicke: return "dicke";
    case Command::ClosedForms: return "closedforms";
    case Command::Validate: return "validate";
    }
    return "?";
}

OutputFormat output_format_from_string(const std::string& name)
{
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "svg") return OutputFormat::Svg;
    throw ConfigError("unknown output format '" + name + "' (expected csv|json|svg)");
}

Table curve_table(const EntanglementCurve& curve)
{
    Table table;
    table.columns = {"r", "theta_r", "E", "phi_star", "bound", "concurrence", "success_prob"};
    for (std::size_t i = 0; i < curve.records.size(); ++i) {
        const auto& rec = curve.records[i];
        table.add_row({std::int64_t(rec.r), theta(curve.instance, rec.r), rec.E, rec.phi_star, rec.bound,
                       curve.concurrence[i], success_probability(curve.instance, rec.r)});
    }
    return table;
}

int run_command(const SweepConfig& config, std::ostream& out, std::ostream& log)
{
    try {
        if (!(config.tol > 0.0)) throw ConfigError("tol must be positive");
        if (config.restarts < 1) throw ConfigError("restarts must be >= 1");
        const int n = resolve_n(config);

        Output output;
        bool passed = true;
        switch (config.command) {
        case Command::Curve: output = curve_output(config, n, config.marked, config.m, log); break;
        case Command::Ghz: output = curve_output(config, n, {MarkedKind::ZerosAndOnes, {}}, 0, log); break;
        case Command::WState:
            output = curve_output(config, n, {MarkedKind::WeightOne, {}}, 0, log);
            log << "# closed-form W target value " << format_number(w_entanglement(n)) << '\n';
            break;
        case Command::Table1: output = table1_output(config, n, log); break;
        case Command::Dicke:
            if (n < 1 || n > kMaxQubits) throw ConfigError("dicke needs 1 <= n <= " + std::to_string(kMaxQubits));
            output = dicke_output(config, n);
            break;
        case Command::ClosedForms:
            if (n < 2 || n > kMaxQubits) throw ConfigError("closedforms needs 2 <= n <= " + std::to_string(kMaxQubits));
            output = closed_forms_output(config, n);
            break;
        case Command::Validate:
            if (n < 2 || n > 16) throw ConfigError("validate needs 2 <= n <= 16");
            if (config.max_m < 1) throw ConfigError("max-m must be >= 1");
            output = validate_output(config, n, passed, log);
            break;
        }
        const int status = emit(config, output, out, log);
        if (status != kExitOk) return status;
        return passed ? kExitOk : kExitValidationFailure;
    } catch (const std::invalid_argument& e) {  // ConfigError, InvalidInstance
        log << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::domain_error& e) {
        log << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::length_error& e) {
        log << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
}

}  // namespace grovent
