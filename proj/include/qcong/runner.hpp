#pragma once

// Evaluation of (case, parameters) cells for the command line tool: one
// entry point per cell, a deterministic parallel driver, and the JSON
// report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/catalog.hpp"
#include "qcong/checker.hpp"

namespace qcong {

struct Cell {
    const Case* c = nullptr;
    long n = 0;   // p for classical cases
    long r = 1;
    std::optional<long> d;
};

enum class Mode { verify, oracle };

struct RunOptions {
    Mode mode = Mode::verify;
    Engine engine = Engine::localized;
    long degree_guard = 0;    // 0: default_degree_guard()
    int samples = 4;          // parametric cases
    bool emit_poly = false;
    int jobs = 1;
    double budget_seconds = 0;   // 0: unlimited
    bool timings = true;         // false: ms and timestamps are zeroed
};

enum class Outcome { pass, fail, skipped, error };
std::string to_string(Outcome o);

struct CellResult {
    std::string id;
    CaseKind kind = CaseKind::q_congruence;
    Domain domain = Domain::q;
    long n = 0;
    long r = 1;
    std::optional<long> d;
    std::vector<std::pair<long, long>> modulus;                // (m, e); classical: (p, target)
    std::vector<std::pair<std::string, long>> achieved;        // "Phi_m" or "p" -> valuation
    Outcome outcome = Outcome::pass;
    std::string engine;
    double ms = 0;
    std::string note;
    std::vector<std::string> polys;   // --emit-poly: failing numerators

    bool conjecture() const { return kind == CaseKind::conjecture; }
};

CellResult run_cell(const Cell& cell, const RunOptions& opt);

/// Runs cells on opt.jobs threads; results come back in input order.
std::vector<CellResult> run_cells(const std::vector<Cell>& cells, const RunOptions& opt);

/// Admissible cells of the cross product. Classical cases use ps (or ns
/// when ps is empty); an empty ds means every d of the case; an empty rs
/// means the case's smallest r.
std::vector<Cell> expand_cells(const std::vector<const Case*>& cases, const std::vector<long>& ns,
                               const std::vector<long>& rs, const std::vector<long>& ds, const std::vector<long>& ps);

struct ReportHeader {
    std::string command;
    std::string started;    // ISO 8601, empty when timings are off
    std::string finished;
    int jobs = 1;
};

/// Current UTC time, ISO 8601.
std::string utc_now();

std::string report_json(const std::vector<CellResult>& results, const ReportHeader& header, const RunOptions& opt);

/// 0 when every non-conjecture cell passed (skips allowed) and every
/// conjecture cell passed, 1 on a theorem failure or error, 2 when only
/// conjecture cells failed.
int exit_code(const std::vector<CellResult>& results);

/// Human-readable one-line summary.
std::string summary_line(const CellResult& r);

}  // namespace qcong
