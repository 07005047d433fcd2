#include "qcong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <thread>

#include "json.hpp"
#include "qcong/classical.hpp"

namespace qcong {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string phi_key(long m) { return "Phi_" + std::to_string(m); }

void fill_modulus(CellResult& out, const CyclotomicMultiset& ms) {
    for (const auto& f : ms.factors) out.modulus.push_back(f);
}

Outcome outcome_of(const std::vector<FactorOutcome>& fs) {
    bool skipped = false;
    for (const auto& f : fs) {
        if (f.status == FactorStatus::fail || f.status == FactorStatus::not_invertible) return Outcome::fail;
        skipped = skipped || f.status == FactorStatus::skipped;
    }
    return skipped ? Outcome::skipped : Outcome::pass;
}

void add_factor_notes(CellResult& out, const std::vector<FactorOutcome>& fs) {
    for (const auto& f : fs) {
        out.achieved.emplace_back(phi_key(f.m), f.achieved);
        if (f.status == FactorStatus::not_invertible) out.note += phi_key(f.m) + " divides a reduced denominator; ";
        if (f.status == FactorStatus::skipped && out.note.find(f.note) == std::string::npos) out.note += f.note + "; ";
        if (f.status != FactorStatus::pass && f.status != FactorStatus::skipped && !f.note.empty())
            out.polys.push_back(phi_key(f.m) + ": " + f.note);
    }
}

void run_q(const Case& c, const Params& p, const RunOptions& opt, CellResult& out) {
    const CheckOptions copt{opt.engine, opt.degree_guard, opt.emit_poly};
    out.engine = to_string(opt.engine);
    if (c.kind == CaseKind::q_identity) {
        out.outcome = check_identity(c, p) ? Outcome::pass : Outcome::fail;
        out.engine = "exact";
        return;
    }
    if (c.kind == CaseKind::parametric_roots) {
        if (c.modulus.empty()) {
            const auto roots = check_roots(c, p);
            out.engine = "exact";
            long bad = 0;
            for (const auto& rc : roots) bad += !rc.holds;
            out.outcome = bad ? Outcome::fail : Outcome::pass;
            out.note = std::to_string(roots.size()) + " root identities, " + std::to_string(bad) + " failing";
            return;
        }
        const ParametricReport rep = check_parametric_sampled(c, p, opt.samples, 200, copt);
        out.engine = to_string(opt.engine) + "+sampled";
        fill_modulus(out, rep.sampled.front().modulus);
        long bad_roots = 0;
        for (const auto& rc : rep.roots) bad_roots += !rc.holds;
        // Worst margin (achieved + allowance - exponent) per factor over the samples.
        std::map<long, long> margin;
        for (const auto& s : rep.sampled)
            for (const auto& f : s.factors) {
                const long v = f.achieved + f.allowance;
                auto it = margin.find(f.m);
                if (it == margin.end() || v < it->second) margin[f.m] = v;
            }
        for (const auto& [m, v] : margin) out.achieved.emplace_back(phi_key(m), v);
        out.outcome = rep.passed() ? Outcome::pass : Outcome::fail;
        std::string ts;
        for (long t : rep.samples) ts += (ts.empty() ? "" : ",") + std::to_string(t);
        out.note = std::to_string(rep.roots.size()) + " root identities (" + std::to_string(bad_roots) +
                   " failing); samples a=q^t, t in {" + ts + "}; a-degree bound " + std::to_string(rep.a_degree_bound);
        if (static_cast<long>(rep.samples.size()) <= rep.a_degree_bound) out.note += " (samples do not exceed it: not a proof)";
        return;
    }
    const VerificationReport rep = check_congruence(c, p, copt);
    fill_modulus(out, rep.modulus);
    add_factor_notes(out, rep.factors);
    out.outcome = outcome_of(rep.factors);
    if (!opt.emit_poly) out.polys.clear();
    if (opt.emit_poly && out.outcome == Outcome::fail && opt.engine == Engine::localized) {
        // Exact numerators come from the naive engine.
        const VerificationReport naive = check_congruence(c, p, CheckOptions{Engine::naive, opt.degree_guard, true});
        CellResult tmp;
        add_factor_notes(tmp, naive.factors);
        out.polys = tmp.polys;
    }
}

void run_oracle(const Case& c, const Params& p, const RunOptions& opt, CellResult& out) {
    out.engine = "localized+naive";
    const CrossCheck cc = oracle_crosscheck(c, p, opt.degree_guard);
    fill_modulus(out, cc.localized.modulus);
    for (const auto& f : cc.localized.factors) out.achieved.emplace_back(phi_key(f.m), f.achieved);
    if (cc.skipped) {
        out.outcome = Outcome::skipped;
        out.note = "naive engine over the degree guard";
        return;
    }
    out.outcome = cc.agree ? Outcome::pass : Outcome::fail;
    out.note = std::string(cc.agree ? "engines agree" : "engines disagree") + "; localized " +
               (cc.localized.passed() ? "pass" : "fail");
}

// Both engines on the same a-samples; the roots are exact either way.
void run_oracle_sampled(const Case& c, const Params& p, const RunOptions& opt, CellResult& out) {
    out.engine = "localized+naive+sampled";
    const ParametricReport loc = check_parametric_sampled(c, p, opt.samples, 200, {Engine::localized, opt.degree_guard});
    const ParametricReport nai = check_parametric_sampled(c, p, opt.samples, 200, {Engine::naive, opt.degree_guard});
    fill_modulus(out, loc.sampled.front().modulus);
    bool agree = loc.samples == nai.samples, skipped = false;
    for (std::size_t i = 0; agree && i < loc.sampled.size(); ++i) {
        const auto& a = loc.sampled[i].factors;
        const auto& b = nai.sampled[i].factors;
        skipped = skipped || nai.sampled[i].skipped();
        agree = a.size() == b.size();
        for (std::size_t k = 0; agree && !skipped && k < a.size(); ++k)
            agree = a[k].m == b[k].m && a[k].status == b[k].status && a[k].achieved == b[k].achieved;
    }
    if (skipped) {
        out.outcome = Outcome::skipped;
        out.note = "naive engine over the degree guard";
        return;
    }
    out.outcome = agree ? Outcome::pass : Outcome::fail;
    out.note = std::string(agree ? "engines agree" : "engines disagree") + " on " + std::to_string(loc.samples.size()) +
               " samples; localized " + (loc.passed() ? "pass" : "fail");
}

void run_classical(const Case& c, const Cell& cell, CellResult& out) {
    out.engine = "padic";
    const PadicCheck pc = check_classical(c, cell.n, cell.r, cell.d);
    out.modulus.emplace_back(cell.n, pc.target);
    out.achieved.emplace_back("p", pc.achieved == kInfiniteValuation ? -1 : pc.achieved);
    out.outcome = pc.passed() ? Outcome::pass : Outcome::fail;
    if (pc.achieved == kInfiniteValuation) out.note = "difference is exactly zero; ";
    if (pc.conjectured_target)
        out.note += "conjectured target " + std::to_string(*pc.conjectured_target) + ": " +
                    (*pc.conjecture_holds() ? "holds" : "fails") + " at (p, r) = (" + std::to_string(cell.n) + ", " +
                    std::to_string(cell.r) + ")";
}

}  // namespace

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::skipped: return "skipped";
        case Outcome::error: return "error";
    }
    return "?";
}

CellResult run_cell(const Cell& cell, const RunOptions& opt) {
    const Case& c = *cell.c;
    CellResult out;
    out.id = c.id;
    out.kind = c.kind;
    out.domain = c.domain;
    out.n = cell.n;
    out.r = cell.r;
    out.d = cell.d;
    const auto t0 = Clock::now();
    try {
        require_admissible(c, cell.n, cell.r, cell.d);
        if (c.domain == Domain::classical) {
            if (opt.mode == Mode::oracle) {
                out.outcome = Outcome::skipped;
                out.note = "classical cases have a single engine";
            } else {
                run_classical(c, cell, out);
            }
        } else {
            const Params p{cell.n, cell.r, cell.d, std::nullopt};
            if (opt.mode == Mode::oracle) {
                if (c.kind == CaseKind::q_identity || (c.kind == CaseKind::parametric_roots && c.modulus.empty())) {
                    out.outcome = Outcome::skipped;
                    out.note = "oracle check applies to congruences";
                } else if (c.kind == CaseKind::parametric_roots) {
                    run_oracle_sampled(c, p, opt, out);
                } else {
                    run_oracle(c, p, opt, out);
                }
            } else {
                run_q(c, p, opt, out);
            }
        }
    } catch (const DegreeGuardExceeded& e) {
        out.outcome = Outcome::skipped;
        out.note = e.what();
    } catch (const std::exception& e) {
        out.outcome = Outcome::error;
        out.note = e.what();
    }
    out.ms = opt.timings ? since(t0) : 0;
    return out;
}

std::vector<CellResult> run_cells(const std::vector<Cell>& cells, const RunOptions& opt) {
    std::vector<CellResult> out(cells.size());
    std::atomic<std::size_t> next{0};
    const auto t0 = Clock::now();
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            if (opt.budget_seconds > 0 && since(t0) > opt.budget_seconds * 1000) {
                CellResult& r = out[i];
                r.id = cells[i].c->id;
                r.kind = cells[i].c->kind;
                r.domain = cells[i].c->domain;
                r.n = cells[i].n;
                r.r = cells[i].r;
                r.d = cells[i].d;
                r.outcome = Outcome::skipped;
                r.note = "time budget exhausted";
                continue;
            }
            out[i] = run_cell(cells[i], opt);
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<Cell> expand_cells(const std::vector<const Case*>& cases, const std::vector<long>& ns,
                               const std::vector<long>& rs, const std::vector<long>& ds, const std::vector<long>& ps) {
    std::vector<Cell> out;
    for (const Case* c : cases) {
        const auto& mains = c->domain == Domain::classical && !ps.empty() ? ps : ns;
        std::vector<long> levels = rs;
        if (levels.empty()) levels = {c->r_min};
        std::vector<std::optional<long>> dvals;
        if (!c->has_d()) {
            dvals = {std::nullopt};
        } else if (ds.empty()) {
            for (long d : c->d_values) dvals.emplace_back(d);
        } else {
            for (long d : ds)
                if (std::find(c->d_values.begin(), c->d_values.end(), d) != c->d_values.end()) dvals.emplace_back(d);
        }
        for (long n : mains)
            for (long r : levels)
                for (const auto& d : dvals)
                    if (admissible(*c, n, r, d)) out.push_back(Cell{c, n, r, d});
    }
    return out;
}

std::string report_json(const std::vector<CellResult>& results, const ReportHeader& header, const RunOptions& opt) {
    ordered_json cases = ordered_json::array();
    std::string digest_src = header.command;
    for (const auto& r : results) {
        ordered_json j;
        j["id"] = r.id;
        j["kind"] = to_string(r.kind);
        ordered_json params;
        params[r.domain == Domain::classical ? "p" : "n"] = r.n;
        params["r"] = r.r;
        if (r.d) params["d"] = *r.d;
        j["params"] = params;
        ordered_json mod = ordered_json::array();
        for (const auto& [m, e] : r.modulus) mod.push_back({m, e});
        j["modulus"] = mod;
        j["outcome"] = to_string(r.outcome);
        ordered_json ach = ordered_json::object();
        for (const auto& [k, v] : r.achieved) ach[k] = v;
        j["achieved_valuations"] = ach;
        j["engine"] = r.engine;
        j["ms"] = opt.timings ? std::round(r.ms * 1000) / 1000 : 0.0;
        if (!r.note.empty()) j["note"] = r.note;
        if (!r.polys.empty()) j["delta_numerators"] = r.polys;
        cases.push_back(j);
        digest_src += "|" + r.id + ":" + std::to_string(r.n) + ":" + std::to_string(r.r) + ":" +
                      (r.d ? std::to_string(*r.d) : "-");
    }
    // FNV-1a over the command and the cell list: identical runs share an id.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : digest_src) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char id[17];
    std::snprintf(id, sizeof id, "%016llx", static_cast<unsigned long long>(h));

    long counts[4] = {0, 0, 0, 0};
    for (const auto& r : results) ++counts[static_cast<int>(r.outcome)];
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["run_id"] = id;
    doc["header"] = {{"command", header.command},
                     {"started", opt.timings ? header.started : ""},
                     {"finished", opt.timings ? header.finished : ""},
                     {"jobs", opt.timings ? header.jobs : 0}};
    doc["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}, {"error", counts[3]}};
    doc["cases"] = cases;
    return doc.dump(2) + "\n";
}

int exit_code(const std::vector<CellResult>& results) {
    bool theorem_bad = false, conj_bad = false;
    for (const auto& r : results) {
        const bool bad = r.outcome == Outcome::fail || r.outcome == Outcome::error;
        if (!bad) continue;
        (r.conjecture() ? conj_bad : theorem_bad) = true;
    }
    return theorem_bad ? 1 : conj_bad ? 2 : 0;
}

std::string summary_line(const CellResult& r) {
    std::string s = r.id + " [" + (r.domain == Domain::classical ? "p=" : "n=") + std::to_string(r.n) +
                    " r=" + std::to_string(r.r);
    if (r.d) s += " d=" + std::to_string(*r.d);
    s += "] " + to_string(r.outcome);
    if (r.conjecture()) s += " (conjecture)";
    if (!r.modulus.empty()) {
        s += " modulus";
        for (std::size_t i = 0; i < r.modulus.size(); ++i) {
            s += " " + std::to_string(r.modulus[i].first) + "^" + std::to_string(r.modulus[i].second);
            if (i < r.achieved.size()) s += "(v=" + std::to_string(r.achieved[i].second) + ")";
        }
    }
    if (!r.note.empty()) s += " -- " + r.note;
    return s;
}

}  // namespace qcong
