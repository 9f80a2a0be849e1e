// mumo: semistable toric degenerations of CI Calabi-Yau families --
// components and strata of the central fiber, the Clemens complex and its
// homology, the maximal-unipotent-monodromy criterion, and period series.

#include <CLI11.hpp>

#include "mumo/cli.hpp"

namespace {

struct CommonArgs {
    std::string fan;
    std::string builtin;
    std::string partition;
    std::string sections;
    std::string json_out;
    bool quiet = false;
    int order = 10;
};

void add_fan_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--fan", args.fan, "fan JSON file");
    cmd->add_option("--builtin", args.builtin,
                    "builtin fan name (p1 p2 p3 p4 p5 example2 wp96111)");
    cmd->add_option("--json", args.json_out, "write the JSON report to this path ('-' = stdout)");
    cmd->add_flag("--quiet", args.quiet, "suppress the human-readable report");
}

int finish(const mumo::RunReport& rep, const CommonArgs& args) {
    if (!args.json_out.empty()) {
        std::string text = rep.to_json().dump(2) + "\n";
        if (args.json_out == "-") {
            std::cout << text;
        } else {
            std::ofstream out(args.json_out, std::ios::binary);
            if (!out) throw mumo::Error("cannot write " + args.json_out);
            out << text;
        }
    }
    if (!args.quiet) std::cout << mumo::render_report(rep);
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric degeneration and monodromy checks"};
    app.require_subcommand(1);

    CommonArgs fan_check, degenerate, monodromy, period;

    auto* c1 = app.add_subcommand("fan-check",
                                  "smoothness, completeness, Delta, reflexivity, dual points");
    add_fan_options(c1, fan_check);

    auto* c2 = app.add_subcommand("degenerate",
                                  "components, strata, Clemens complex, Betti numbers, genus");
    add_fan_options(c2, degenerate);
    c2->add_option("--partition", degenerate.partition,
                   "partition JSON file, 'single', or inline 'blocks:0,1;2,3'");

    auto* c3 = app.add_subcommand("monodromy", "maximal-unipotent-monodromy criterion report");
    add_fan_options(c3, monodromy);
    c3->add_option("--partition", monodromy.partition,
                   "partition JSON file, 'single', or inline 'blocks:0,1;2,3'");
    c3->add_option("--sections", monodromy.sections,
                   "sections JSON file or recipe (ones fermat zero); default ones");

    auto* c4 = app.add_subcommand("period", "period series of a hypersurface family");
    add_fan_options(c4, period);
    c4->add_option("--sections", period.sections,
                   "sections JSON file or recipe (ones fermat zero); default fermat");
    c4->add_option("--order", period.order, "series order M")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c1->parsed()) return finish(mumo::cmd_fan_check(fan_check.fan, fan_check.builtin),
                                        fan_check);
        if (c2->parsed())
            return finish(mumo::cmd_degenerate(degenerate.fan, degenerate.builtin,
                                               degenerate.partition),
                          degenerate);
        if (c3->parsed())
            return finish(mumo::cmd_monodromy(monodromy.fan, monodromy.builtin,
                                              monodromy.partition, monodromy.sections),
                          monodromy);
        if (c4->parsed())
            return finish(mumo::cmd_period(period.fan, period.builtin, period.sections,
                                           period.order),
                          period);
    } catch (const mumo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
