// grovent: geometric entanglement across Grover iterations.
//
//   grovent curve --n 7 --m 1 --marked all-zeros
//   grovent table1 --n 10 --format json --out table1.json
//   grovent validate --n 6 --max-m 4

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "grovent/sweep.hpp"

namespace {

struct RawOptions {
    int n = 0;
    int m = 0;
    std::string marked = "all-zeros";
    std::string angle = "paper";
    std::string format = "csv";
    std::string out;
    double tol = grovent::kDefaultTolerance;
    std::uint64_t seed = 20240611;
    int restarts = 16;
    int max_m = 4;
    std::vector<int> ms{1, 2, 3, 5, 10};
};

void add_common(CLI::App* cmd, RawOptions& o, bool with_marked)
{
    cmd->add_option("--n", o.n, "qubit count (command-specific default)");
    if (with_marked) {
        cmd->add_option("--m", o.m, "number of marked states (0: implied by --marked)");
        cmd->add_option("--marked", o.marked, "all-zeros|zeros-ones|paper-m|weight-one|explicit:<comma-list>");
    }
    cmd->add_option("--angle", o.angle, "angle convention: paper|exact");
    cmd->add_option("--format", o.format, "csv|json|svg");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--tol", o.tol, "maximization tolerance");
    cmd->add_option("--seed", o.seed, "seed for product-oracle restarts");
    cmd->add_option("--restarts", o.restarts, "product-oracle restarts");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometric entanglement across Grover search iterations"};
    app.require_subcommand(1);

    RawOptions o;
    struct Sub {
        const char* name;
        const char* help;
        bool marked;
    };
    const Sub subs[] = {
        {"curve", "entanglement per iteration for one instance", true},
        {"table1", "r_opt and peak-entanglement iteration for n fixed, M varying", false},
        {"ghz", "curve with |0..0> and |1..1> marked (GHZ target)", false},
        {"wstate", "curve with the n weight-one states marked (W target)", false},
        {"dicke", "Dicke-state entanglement, closed form vs numeric, k = 0..n", false},
        {"closedforms", "GHZ/W/Dicke entanglement for n = 2..--n", false},
        {"validate", "check the fast path against dense simulation and general product states", false},
    };
    for (const auto& s : subs) {
        auto* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, o, s.marked);
        if (std::string(s.name) == "validate") cmd->add_option("--max-m", o.max_m, "largest M to validate");
        if (std::string(s.name) == "table1") cmd->add_option("--ms", o.ms, "marked-state counts");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return grovent::kExitInvalidConfig;
    }

    grovent::SweepConfig config;
    try {
        config.command = grovent::command_from_string(app.get_subcommands().front()->get_name());
        config.n = o.n;
        config.m = o.m;
        config.marked = grovent::parse_marked_spec(o.marked);
        config.angle = grovent::angle_convention_from_string(o.angle);
        config.format = grovent::output_format_from_string(o.format);
        config.out = o.out;
        config.tol = o.tol;
        config.seed = o.seed;
        config.restarts = o.restarts;
        config.max_m = o.max_m;
        config.table_ms = o.ms;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return grovent::kExitInvalidConfig;
    }
    return grovent::run_command(config, std::cout, std::cerr);
}
