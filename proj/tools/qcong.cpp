// qcong: list, verify and sweep the case catalog.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcong/runner.hpp"

using namespace qcong;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "5,7,11" or "3..9" or a mix.
std::vector<long> parse_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stol(item));
                continue;
            }
            const long lo = std::stol(item.substr(0, dots)), hi = std::stol(item.substr(dots + 2));
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad value '") + item + "' for " + what);
        }
    }
    return out;
}

struct Catalog {
    std::vector<Case> cases;

    void load(const std::vector<std::string>& files) {
        cases = builtin_cases();
        for (const auto& f : files)
            for (auto& c : load_cases(f)) {
                if (find_case(cases, c.id)) throw UsageError(f + ": case id '" + c.id + "' already exists");
                cases.push_back(std::move(c));
            }
        std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
    }

    const Case& get(const std::string& id) const {
        const Case* c = find_case(cases, id);
        if (!c) throw UsageError("unknown case id '" + id + "' (see 'qcong list')");
        return *c;
    }

    std::vector<const Case*> select(const std::vector<std::string>& sel) const {
        std::vector<const Case*> out;
        for (const auto& s : sel) {
            if (s == "all" || s == "all-theorems" || s == "all-conjectures") {
                for (const auto& c : cases)
                    if (s == "all" || (s == "all-conjectures") == c.is_conjecture()) out.push_back(&c);
            } else {
                out.push_back(&get(s));
            }
        }
        return out;
    }
};

struct Common {
    std::vector<std::string> catalogs;
    std::string engine = "localized";
    long degree_guard = 0;
    int samples = 4;
    bool emit_poly = false;
    int jobs = 1;
    std::string report;
    bool no_timing = false;
    bool quiet = false;

    void add_to(CLI::App* app) {
        app->add_option("--catalog", catalogs, "extra case file(s) in the documented JSON format");
        app->add_option("--engine", engine, "localized or naive")->check(CLI::IsMember({"localized", "naive"}));
        app->add_option("--degree-guard", degree_guard, "naive engine degree limit (default: $QCONG_DEGREE_GUARD or 200000)");
        app->add_option("--samples", samples, "sample count for parametric cases")->check(CLI::PositiveNumber);
        app->add_flag("--emit-poly", emit_poly, "include exact Delta numerators of failing factors in the report");
        app->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
        app->add_option("--report,-o", report, "write the JSON report here ('-' for stdout)");
        app->add_flag("--no-timing", no_timing, "zero all timings and timestamps in the report");
        app->add_flag("--quiet,-q", quiet, "no per-cell lines");
    }

    RunOptions options(Mode mode) const {
        RunOptions o;
        o.mode = mode;
        o.engine = engine == "naive" ? Engine::naive : Engine::localized;
        o.degree_guard = degree_guard;
        o.samples = samples;
        o.emit_poly = emit_poly;
        o.jobs = jobs;
        o.timings = !no_timing;
        return o;
    }
};

int finish(const std::vector<CellResult>& results, const Common& common, const RunOptions& opt, ReportHeader header) {
    header.finished = utc_now();
    header.jobs = opt.jobs;
    const bool json_stdout = common.report == "-";
    if (!common.quiet && !json_stdout)
        for (const auto& r : results) std::cout << summary_line(r) << "\n";
    if (!common.report.empty()) {
        const std::string doc = report_json(results, header, opt);
        if (json_stdout) {
            std::cout << doc;
        } else {
            std::ofstream out(common.report);
            if (!out) throw std::runtime_error("cannot write " + common.report);
            out << doc;
        }
    }
    const int code = exit_code(results);
    if (!json_stdout) {
        long counts[4] = {0, 0, 0, 0};
        for (const auto& r : results) ++counts[static_cast<int>(r.outcome)];
        std::cout << results.size() << " cells: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
                  << " skipped, " << counts[3] << " error\n";
    }
    return code;
}

std::string command_line(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-supercongruences and their classical p-adic counterparts"};
    app.require_subcommand(1);

    // list
    auto* list = app.add_subcommand("list", "print the case catalog");
    std::string kind_filter, anchor_filter;
    std::vector<std::string> list_catalogs;
    list->add_option("--kind", kind_filter, "only cases of this kind")
        ->check(CLI::IsMember({"q_congruence", "q_identity", "parametric_roots", "classical_padic", "conjecture"}));
    list->add_option("--anchor", anchor_filter, "substring of the anchor label or result");
    list->add_option("--catalog", list_catalogs, "extra case file(s)");

    // verify
    auto* verify = app.add_subcommand("verify", "check cases at given parameters");
    Common vcommon;
    vcommon.add_to(verify);
    std::vector<std::string> vcases;
    std::optional<long> vn, vp, vr, vd;
    verify->add_option("--case,-c", vcases, "case id (repeatable)")->required();
    verify->add_option("--n", vn, "main parameter n (or p for classical cases)");
    verify->add_option("--p", vp, "prime p for classical cases");
    verify->add_option("--r", vr, "level r (default: the case's smallest)");
    verify->add_option("--d", vd, "truncation divisor d (default: all)");

    // sweep and oracle-check share their selection options
    struct SweepArgs {
        Common common;
        std::vector<std::string> cases{"all-theorems"};
        std::string n = "5,7", r, d, p;
        double budget = 0;
    };
    SweepArgs sw, oc;
    auto add_sweep = [](CLI::App* a, SweepArgs& s) {
        s.common.add_to(a);
        a->add_option("--cases", s.cases, "ids, 'all-theorems', 'all-conjectures' or 'all'")->delimiter(',');
        a->add_option("--n", s.n, "values of n, e.g. 5,7 or 3..9");
        a->add_option("--r", s.r, "values of r (default: each case's smallest)");
        a->add_option("--d", s.d, "values of d (default: all)");
        a->add_option("--p", s.p, "primes for classical cases (default: the n values)");
        a->add_option("--budget", s.budget, "wall-time budget in seconds; later cells are skipped");
    };
    auto* sweep = app.add_subcommand("sweep", "run the cross product of cases and parameters");
    add_sweep(sweep, sw);
    auto* oracle = app.add_subcommand("oracle-check", "compare the localized and naive engines");
    add_sweep(oracle, oc);
    oc.n = "3..9";
    oc.r = "1";

    // export
    auto* exp = app.add_subcommand("export", "write the built-in catalog as a case file");
    std::string export_path = "-";
    exp->add_option("path", export_path, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const std::string cmdline = command_line(argc, argv);
    try {
        if (*list) {
            Catalog cat;
            cat.load(list_catalogs);
            std::cout << std::left << std::setw(22) << "ID" << std::setw(18) << "KIND" << std::setw(30) << "ANCHOR"
                      << "CONSTRAINTS\n";
            for (const auto& c : cat.cases) {
                if (!kind_filter.empty() && to_string(c.kind) != kind_filter) continue;
                const std::string anchor = c.anchor.result + " (" + c.anchor.label + ")";
                if (!anchor_filter.empty() && anchor.find(anchor_filter) == std::string::npos) continue;
                std::string cons;
                for (const auto& x : c.constraints) cons += (cons.empty() ? "" : ", ") + x;
                if (c.has_d()) {
                    std::string ds;
                    for (long d : c.d_values) ds += (ds.empty() ? "" : ",") + std::to_string(d);
                    cons += (cons.empty() ? "" : ", ") + std::string("d in {") + ds + "}";
                }
                if (c.r_min != 1 || c.r_max)
                    cons += (cons.empty() ? "" : ", ") + std::string("r") +
                            (c.r_max ? " in [" + std::to_string(c.r_min) + "," + std::to_string(*c.r_max) + "]"
                                     : ">=" + std::to_string(c.r_min));
                std::cout << std::setw(22) << c.id << std::setw(18) << to_string(c.kind) << std::setw(30) << anchor
                          << cons << "\n";
            }
            return 0;
        }
        if (*exp) {
            if (export_path == "-")
                std::cout << cases_to_json(builtin_cases());
            else
                save_cases(export_path, builtin_cases());
            return 0;
        }
        if (*verify) {
            Catalog cat;
            cat.load(vcommon.catalogs);
            std::vector<Cell> cells;
            for (const auto& id : vcases) {
                const Case& c = cat.get(id);
                std::optional<long> main = c.domain == Domain::classical && vp ? vp : vn;
                long r = vr.value_or(c.r_min);
                if (!main) {
                    const auto inst = smallest_instance(c);
                    if (!inst) throw UsageError(id + ": no admissible instance found; pass --n");
                    main = inst->n;
                    if (!vr) r = inst->r;
                }
                std::vector<std::optional<long>> ds;
                if (vd || !c.has_d())
                    ds = {vd};
                else
                    for (long d : c.d_values) ds.emplace_back(d);
                std::vector<Cell> mine;
                std::string why;
                for (const auto& d : ds) {
                    try {
                        require_admissible(c, *main, r, d);
                        mine.push_back(Cell{&c, *main, r, d});
                    } catch (const CaseError& e) {
                        if (why.empty()) why = e.what();
                    }
                }
                if (mine.empty() || (vd && !why.empty())) throw UsageError(why);
                cells.insert(cells.end(), mine.begin(), mine.end());
            }
            const RunOptions opt = vcommon.options(Mode::verify);
            ReportHeader h{cmdline, utc_now(), "", opt.jobs};
            return finish(run_cells(cells, opt), vcommon, opt, h);
        }
        for (const auto& pair : {std::make_pair(sweep, &sw), std::make_pair(oracle, &oc)}) {
            if (!*pair.first) continue;
            SweepArgs& s = *pair.second;
            Catalog cat;
            cat.load(s.common.catalogs);
            const auto selected = cat.select(s.cases);
            const auto cells = expand_cells(selected, parse_list(s.n, "--n"), parse_list(s.r, "--r"),
                                            parse_list(s.d, "--d"), parse_list(s.p, "--p"));
            RunOptions opt = s.common.options(pair.first == oracle ? Mode::oracle : Mode::verify);
            opt.budget_seconds = s.budget;
            ReportHeader h{cmdline, utc_now(), "", opt.jobs};
            return finish(run_cells(cells, opt), s.common, opt, h);
        }
    } catch (const UsageError& e) {
        std::cerr << "qcong: " << e.what() << "\n";
        return kUsage;
    } catch (const CaseError& e) {
        std::cerr << "qcong: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "qcong: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
