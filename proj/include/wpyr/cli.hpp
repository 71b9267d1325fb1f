// Command-line front end: configuration, the verification harness, module
// export, and the versioned JSON report format ("wpyramid-report/1").

#pragma once

#include "repn.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

namespace wpyr {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command; // "pyramids", "verify", "module"
    std::vector<int> partition;
    std::string pyramid_selector = "all"; // "all", "left", "right", or explicit offsets
    std::vector<int> offsets;             // used when nonempty
    long long characteristic = 0;         // 0 or a prime
    std::vector<std::string> suites;
    int degree_bound = 1; // superscript slack beyond the PBW ranges
    long long guard_dim = 4096;
    std::uint64_t seed = 12345;
    int workers = 1;
    bool corrupt = false;
    bool timings = false;
    std::string out_path;
    // module subcommand
    std::vector<long long> tableau_entries;
    std::string module_kind = "induced"; // "induced" or "verma"
    bool want_head = false;
    bool want_whittaker = false;
    bool want_hw_witness = false;

    json echo() const
    {
        json j;
        j["command"] = command;
        j["partition"] = partition;
        j["pyramid"] = pyramid_selector;
        j["offsets"] = offsets;
        j["char"] = characteristic;
        j["suite"] = suites;
        j["degree_bound"] = degree_bound;
        j["guard_dim"] = guard_dim;
        j["seed"] = seed;
        j["workers"] = workers;
        j["corrupt"] = corrupt;
        if (command == "module") {
            j["tableau"] = tableau_entries;
            j["kind"] = module_kind;
        }
        return j;
    }
};

inline json pyramid_json(const Pyramid& py)
{
    json j;
    j["partition"] = py.partition().parts;
    j["offsets"] = py.offsets();
    return j;
}

/// Text diagram in the familiar box style: numbered boxes, rows indented by
/// their offsets, borders spanning the union of adjacent rows.
inline std::string render_pyramid(const Pyramid& py)
{
    const int n = py.rows();
    const int w = static_cast<int>(std::to_string(py.box_count()).size());
    auto border = [&](int from_col, int to_col, int indent) {
        std::string s(indent * (w + 1), ' ');
        for (int c = from_col; c <= to_col; ++c) {
            s += "+";
            s += std::string(w, '-');
        }
        return s + "+";
    };
    std::string out;
    for (int r = 1; r <= n; ++r) {
        const int lo = py.row_offset(r), hi = py.row_offset(r) + py.row_length(r);
        if (r == 1) {
            out += border(lo + 1, hi, lo) + "\n";
        } else {
            const int plo = py.row_offset(r - 1), phi = plo + py.row_length(r - 1);
            out += border(std::min(lo, plo) + 1, std::max(hi, phi), std::min(lo, plo)) + "\n";
        }
        out += std::string(lo * (w + 1), ' ');
        for (int c = lo + 1; c <= hi; ++c) {
            std::string num = std::to_string(py.box_at(r, c));
            out += "|" + std::string(w - num.size(), ' ') + num;
        }
        out += "|\n";
    }
    out += border(1, py.columns(), 0) + "\n";
    return out;
}

inline std::string render_shift_matrix(const ShiftMatrix& sm)
{
    std::string out;
    for (int i = 1; i <= sm.n; ++i) {
        out += "[";
        for (int j = 1; j <= sm.n; ++j) {
            if (j > 1)
                out += " ";
            out += std::to_string(sm(i, j));
        }
        out += "]\n";
    }
    return out;
}

namespace cli_detail {

inline std::vector<Pyramid> select_pyramids(const RunConfig& cfg)
{
    Partition part(cfg.partition);
    auto all = enumerate_pyramids(part);
    if (!cfg.offsets.empty()) {
        for (const Pyramid& py : all)
            if (py.offsets() == cfg.offsets)
                return {py};
        throw validation_error("offsets do not describe a pyramid of this partition");
    }
    if (cfg.pyramid_selector == "left")
        return {all.front()};
    if (cfg.pyramid_selector == "right")
        return {all.back()};
    if (cfg.pyramid_selector == "all")
        return all;
    throw validation_error("unknown pyramid selector: " + cfg.pyramid_selector);
}

struct SuiteTask {
    Pyramid pyramid;
    std::string suite;
};

inline CheckReport run_suite(const SuiteTask& task, const RunConfig& cfg)
{
    CheckReport rep;
    const Pyramid& py = task.pyramid;
    std::mt19937_64 rng(cfg.seed);
    try {
        if (task.suite == "relations" || task.suite == "invariance" ||
            task.suite == "leading-terms" || task.suite == "pbw-rank") {
            WGeneratorTable table(py, cfg.characteristic, cfg.degree_bound);
            if (cfg.corrupt)
                table.corrupt_for_negative_control();
            if (task.suite == "relations")
                rep = check_yangian_relations(table);
            else if (task.suite == "invariance") {
                rep = check_m_invariance(table);
                rep.merge(check_truncation(table));
            } else if (task.suite == "leading-terms")
                rep = check_leading_terms(table);
            else
                rep = check_pbw_independence(table, 3);
        } else if (task.suite == "one-dim") {
            if (cfg.characteristic > 0) {
                rep = check_one_dim_classification(py, cfg.characteristic);
            } else {
                const auto entries = classify_one_dim(py, 0);
                bool distinct = true;
                for (size_t a = 0; a < entries.size() && distinct; ++a)
                    for (size_t b = a + 1; b < entries.size(); ++b)
                        if (entries[a].tuple == entries[b].tuple) {
                            distinct = false;
                            break;
                        }
                rep.check("one-dim-separation(char0)", to_string(py), distinct, "");
            }
        } else if (task.suite == "main-theorem") {
            if (cfg.characteristic < 2)
                throw validation_error("main-theorem suite needs a prime characteristic");
            rep = verify_main_theorem(py, cfg.characteristic, rng, cfg.guard_dim);
        } else {
            throw validation_error("unknown suite: " + task.suite);
        }
    } catch (const guard_exceeded& g) {
        rep.skip(task.suite, "", g.what());
    }
    for (auto& r : rep.records)
        r.pyramid = to_string(py);
    return rep;
}

} // namespace cli_detail

struct CliResult {
    int exit_code = 0;
    json report;
    std::string text; // human-readable summary printed to stdout
};

inline CliResult cmd_pyramids(const RunConfig& cfg)
{
    CliResult res;
    Partition part(cfg.partition);
    const auto pys = enumerate_pyramids(part);
    res.report["schema"] = "wpyramid-report/1";
    res.report["config"] = cfg.echo();
    json list = json::array();
    std::string text;
    for (size_t k = 0; k < pys.size(); ++k) {
        const ShiftMatrix sm = shift_matrix(pys[k]);
        json e = pyramid_json(pys[k]);
        json rows = json::array();
        for (int i = 1; i <= sm.n; ++i) {
            json row = json::array();
            for (int j = 1; j <= sm.n; ++j)
                row.push_back(sm(i, j));
            rows.push_back(row);
        }
        e["shift_matrix"] = rows;
        list.push_back(e);
        text += "pyramid " + std::to_string(k + 1) + ": partition (" +
                to_string(pys[k].partition()) + "), offsets [";
        for (size_t t = 0; t < pys[k].offsets().size(); ++t)
            text += (t ? "," : "") + std::to_string(pys[k].offsets()[t]);
        text += "]\n" + render_pyramid(pys[k]) + "shift matrix:\n" + render_shift_matrix(sm) +
                "\n";
    }
    res.report["pyramids"] = list;
    res.report["summary"] = {{"pass", pys.size()}, {"fail", 0}, {"skipped", 0}};
    res.text = text;
    res.exit_code = 0;
    return res;
}

inline CliResult cmd_verify(const RunConfig& cfg)
{
    CliResult res;
    const auto pys = cli_detail::select_pyramids(cfg);
    std::vector<cli_detail::SuiteTask> tasks;
    for (const Pyramid& py : pys)
        for (const std::string& suite : cfg.suites)
            tasks.push_back({py, suite});

    std::vector<CheckReport> results(tasks.size());
    std::vector<double> task_ms(tasks.size(), 0.0);
    const int workers = std::max(1, cfg.workers);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t k = next.fetch_add(1);
            if (k >= tasks.size())
                return;
            const auto t0 = std::chrono::steady_clock::now();
            results[k] = cli_detail::run_suite(tasks[k], cfg);
            task_ms[k] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    CheckReport merged;
    for (const auto& r : results)
        merged.merge(r);
    merged.sort();

    res.report["schema"] = "wpyramid-report/1";
    res.report["config"] = cfg.echo();
    json checks = json::array();
    for (const auto& r : merged.records) {
        json e;
        e["check_id"] = r.check_id;
        e["pyramid"] = r.pyramid;
        e["char"] = cfg.characteristic;
        e["instance"] = r.instance;
        e["status"] = r.status;
        if (!r.witness.empty())
            e["witness"] = r.witness;
        checks.push_back(e);
    }
    res.report["checks"] = checks;
    res.report["summary"] = {
        {"pass", merged.passed()}, {"fail", merged.failed()}, {"skipped", merged.skipped()}};
    if (cfg.timings) {
        json t = json::array();
        for (size_t k = 0; k < tasks.size(); ++k)
            t.push_back({{"pyramid", to_string(tasks[k].pyramid)},
                         {"suite", tasks[k].suite},
                         {"ms", task_ms[k]}});
        res.report["timings"] = t;
    }

    res.text = "verify: " + std::to_string(merged.passed()) + " passed, " +
               std::to_string(merged.failed()) + " failed, " + std::to_string(merged.skipped()) +
               " skipped\n";
    for (const auto& r : merged.records)
        if (r.status == "fail")
            res.text +=
                "FAIL " + r.check_id + " " + r.pyramid + " " + r.instance + ": " + r.witness + "\n";
    res.exit_code = merged.failed() > 0 ? 1 : (merged.skipped() > 0 ? 2 : 0);
    return res;
}

inline json module_json(const MatrixModule& M)
{
    json j;
    switch (M.kind) {
    case ModuleKind::induced:
        j["kind"] = "induced";
        break;
    case ModuleKind::verma:
        j["kind"] = "verma";
        break;
    case ModuleKind::quotient:
        j["kind"] = "quotient";
        break;
    }
    j["p"] = M.p;
    j["pyramid"] = pyramid_json(M.pyramid);
    json entries = json::array();
    for (int k = 1; k <= M.pyramid.box_count(); ++k)
        entries.push_back(M.tableau.entry(k));
    j["tableau"] = {{"entries", entries}};
    j["dim"] = M.dim;
    json gens = json::array();
    const int N = M.pyramid.box_count();
    for (int i = 1; i <= N; ++i)
        for (int jdx = 1; jdx <= N; ++jdx) {
            json g;
            g["i"] = i;
            g["j"] = jdx;
            g["matrix"] = M.action(i, jdx).a; // row-major residues
            gens.push_back(g);
        }
    j["generators"] = gens;
    return j;
}

inline CliResult cmd_module(const RunConfig& cfg)
{
    CliResult res;
    const auto pys = cli_detail::select_pyramids(cfg);
    if (pys.size() != 1)
        throw validation_error("module command needs a single pyramid (use --offsets or "
                               "--pyramid left/right)");
    const Pyramid& py = pys[0];
    if (cfg.characteristic < 2)
        throw validation_error("module command needs a prime characteristic");
    Tableau A(py, cfg.tableau_entries);
    std::mt19937_64 rng(cfg.seed);

    CheckReport rep;
    json out;
    out["schema"] = "wpyramid-report/1";
    out["config"] = cfg.echo();

    MatrixModule M = cfg.module_kind == "verma"
                         ? build_baby_verma(py, cfg.characteristic, A, cfg.guard_dim)
                         : build_induced(py, cfg.characteristic, A, cfg.guard_dim);
    rep.merge(check_module_axioms(M, rng));
    out["module"] = module_json(M);

    if (cfg.want_head) {
        MatrixModule H = simple_head(M, rng);
        out["head"] = module_json(H);
        rep.pass("module-head", "dim " + std::to_string(H.dim));
    }
    if (cfg.want_whittaker) {
        const WhittakerSpace ws = whittaker_invariants(M);
        out["whittaker"] = {{"dim", ws.dim}};
        LieDatum lie(py);
        rep.check("module-whittaker-dim", to_string(py),
                  static_cast<long long>(ws.dim) * ipow(cfg.characteristic, lie.d_chi) == M.dim,
                  "dim V^{m_chi} = " + std::to_string(ws.dim));
    }
    if (cfg.want_hw_witness && M.kind == ModuleKind::induced) {
        const HighestWeightWitness w = highest_weight_check(M);
        json wit;
        wit["vector"] = w.vector;
        wit["nonzero"] = w.nonzero;
        wit["annihilated"] = w.annihilated;
        wit["weight_matches"] = w.weight_matches;
        out["highest_weight"] = wit;
        rep.check("module-highest-weight", to_string(py), w.ok(), "");
    }

    json checks = json::array();
    for (const auto& r : rep.records) {
        json e;
        e["check_id"] = r.check_id;
        e["pyramid"] = to_string(py);
        e["char"] = cfg.characteristic;
        e["instance"] = r.instance;
        e["status"] = r.status;
        if (!r.witness.empty())
            e["witness"] = r.witness;
        checks.push_back(e);
    }
    out["checks"] = checks;
    out["summary"] = {
        {"pass", rep.passed()}, {"fail", rep.failed()}, {"skipped", rep.skipped()}};
    res.report = out;
    res.text = "module: dim " + std::to_string(M.dim) + ", " + std::to_string(rep.passed()) +
               " checks passed, " + std::to_string(rep.failed()) + " failed\n";
    res.exit_code = rep.failed() > 0 ? 1 : (rep.skipped() > 0 ? 2 : 0);
    return res;
}

inline CliResult run_command(const RunConfig& cfg)
{
    if (cfg.command == "pyramids")
        return cmd_pyramids(cfg);
    if (cfg.command == "verify")
        return cmd_verify(cfg);
    if (cfg.command == "module")
        return cmd_module(cfg);
    throw validation_error("unknown command: " + cfg.command);
}

inline void write_report(const CliResult& res, const std::string& out_path)
{
    if (out_path.empty())
        return;
    std::ofstream f(out_path);
    if (!f)
        throw std::runtime_error("cannot open " + out_path);
    f << res.report.dump(2) << "\n";
}

} // namespace wpyr
