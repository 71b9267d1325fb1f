// wpyramid: pyramid combinatorics, W-algebra verification suites, and
// explicit module construction over reduced enveloping algebras of gl_N.

#include "wpyr/cli.hpp"

#include <CLI11.hpp>

namespace {

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact W-algebra computations attached to pyramids over gl_N"};
    app.require_subcommand(1);

    wpyr::RunConfig cfg;
    std::string partition_str, offsets_str, tableau_str, suite_str;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--partition", partition_str,
                        "comma-separated row lengths, weakly increasing")
            ->envname("WPYRAMID_PARTITION");
        cmd->add_option("--offsets", offsets_str, "explicit row offsets selecting one pyramid")
            ->envname("WPYRAMID_OFFSETS");
        cmd->add_option("--pyramid", cfg.pyramid_selector, "pyramid selector: all, left or right")
            ->envname("WPYRAMID_PYRAMID");
        cmd->add_option("--p,--char", cfg.characteristic, "characteristic: 0 or a prime")
            ->envname("WPYRAMID_CHAR");
        cmd->add_option("--degree-bound", cfg.degree_bound,
                        "superscript slack beyond the PBW ranges")
            ->envname("WPYRAMID_DEGREE_BOUND");
        cmd->add_option("--guard-dim", cfg.guard_dim, "largest module dimension to build")
            ->envname("WPYRAMID_GUARD_DIM");
        cmd->add_option("--seed", cfg.seed, "seed for all randomized checks")
            ->envname("WPYRAMID_SEED");
        cmd->add_option("--out", cfg.out_path, "write the JSON report here")
            ->envname("WPYRAMID_OUT");
        cmd->add_option("--workers", cfg.workers, "parallel suite instances")
            ->envname("WPYRAMID_WORKERS");
        cmd->add_flag("--timings", cfg.timings, "include wall-clock timings in the report")
            ->envname("WPYRAMID_TIMINGS");
    };

    CLI::App* pyramids = app.add_subcommand("pyramids", "enumerate pyramids and shift matrices");
    pyramids->add_option("partition", partition_str, "comma-separated row lengths")->required();
    pyramids->add_option("--out", cfg.out_path, "write the JSON report here");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify
        ->add_option("--suite", suite_str,
                     "comma-separated: relations, invariance, leading-terms, pbw-rank, one-dim, "
                     "main-theorem")
        ->required()
        ->envname("WPYRAMID_SUITE");
    verify->add_flag("--corrupt", cfg.corrupt,
                     "test-only negative control: perturb one generator before checking");

    CLI::App* module = app.add_subcommand("module", "build and export an explicit module");
    add_common(module);
    module->add_option("--tableau", tableau_str, "comma-separated box entries")->required();
    module->add_option("--kind", cfg.module_kind, "induced or verma");
    module->add_flag("--head", cfg.want_head, "also export the simple head");
    module->add_flag("--whittaker", cfg.want_whittaker, "report the Whittaker invariants");
    module->add_flag("--hw-witness", cfg.want_hw_witness,
                     "include the highest-weight witness vector");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pyramids->parsed())
            cfg.command = "pyramids";
        else if (verify->parsed())
            cfg.command = "verify";
        else
            cfg.command = "module";

        if (!partition_str.empty())
            cfg.partition = parse_int_list(partition_str);
        if (cfg.partition.empty())
            throw wpyr::validation_error("--partition is required");
        if (!offsets_str.empty())
            cfg.offsets = parse_int_list(offsets_str);
        if (!tableau_str.empty())
            for (int v : parse_int_list(tableau_str))
                cfg.tableau_entries.push_back(v);
        if (!suite_str.empty()) {
            size_t start = 0;
            for (size_t end = 0; end <= suite_str.size(); ++end)
                if (end == suite_str.size() || suite_str[end] == ',') {
                    if (end > start)
                        cfg.suites.push_back(suite_str.substr(start, end - start));
                    start = end + 1;
                }
        }

        const wpyr::CliResult res = wpyr::run_command(cfg);
        std::cout << res.text;
        wpyr::write_report(res, cfg.out_path);
        return res.exit_code;
    } catch (const wpyr::guard_exceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
