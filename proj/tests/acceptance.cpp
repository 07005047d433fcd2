// Acceptance suite: one line per criterion, exit status 1 when any gating
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcong/catalog.hpp"
#include "qcong/checker.hpp"
#include "qcong/classical.hpp"
#include "qcong/hyperseries.hpp"

using namespace qcong;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> problems;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
};

std::string inst(const std::string& id, long n, long r, std::optional<long> d) {
    std::string s = id + "(" + std::to_string(n) + "," + std::to_string(r);
    if (d) s += ",d=" + std::to_string(*d);
    return s + ")";
}

// d values of a case, or a single empty one.
std::vector<std::optional<long>> ds_of(const Case& c) {
    std::vector<std::optional<long>> out;
    for (long d : c.d_values) out.emplace_back(d);
    if (out.empty()) out.emplace_back();
    return out;
}

// Runs f under a guard: exceptions count as failures.
void guarded(Result& res, const std::string& what, const std::function<bool()>& f) {
    try {
        res.expect(f(), what);
    } catch (const std::exception& e) {
        res.expect(false, what + ": " + e.what());
    }
}

Result identities() {
    Result res;
    auto id_at = [&](const std::string& id, std::vector<long> ns) {
        const Case& c = lookup(id);
        for (long n : ns)
            guarded(res, inst(id, n, 1, std::nullopt), [&] { return check_identity(c, Params{n, 1, std::nullopt, std::nullopt}); });
    };
    id_at("lem2.2", {5, 7, 11, 13});
    id_at("lem-3-2", {3, 5, 7, 9});
    id_at("div-3-new-root", {3, 5, 7});
    id_at("qb2-new-root", {3, 5, 7});
    for (long n : {3, 5, 7, 9}) guarded(res, "watson(" + std::to_string(n) + ")", [&] { return watson_instance_check(n); });
    return res;
}

void congruences(Result& res, const std::string& id, std::vector<long> ns, long r) {
    const Case& c = lookup(id);
    for (long n : ns)
        for (auto d : ds_of(c)) {
            if (!admissible(c, n, r, d)) continue;
            guarded(res, inst(id, n, r, d), [&] { return check_congruence(c, Params{n, r, d, std::nullopt}).passed(); });
        }
}

Result regression_r1() {
    Result res;
    for (const char* id : {"thm1.1a", "thm1.1b"}) congruences(res, id, {5, 7, 11}, 1);
    for (const char* id : {"thm1.2a", "thm1.2b"}) congruences(res, id, {3, 5, 7, 9}, 1);
    for (const char* id : {"main-new", "main-3", "main-4", "main-5", "q-rv"}) congruences(res, id, {3, 5, 7}, 1);
    congruences(res, "main-e", {7, 13}, 1);
    congruences(res, "main-f", {5, 9, 13}, 1);
    for (const char* id : {"new-1-1", "new-2-1", "lem-4k-2a", "lem-4k-2b"}) congruences(res, id, {3, 5}, 1);
    return res;
}

Result regression_r2() {
    Result res;
    for (const char* id : {"thm1.1a", "thm1.2a", "main-4", "q-rv"}) congruences(res, id, {5}, 2);
    return res;
}

Result parametric() {
    Result res;
    const long grid[][3] = {{5, 1, 1}, {5, 1, 2}, {7, 1, 2}, {5, 2, 2}};
    for (const char* id : {"thm2.3", "main-2-par"}) {
        const Case& c = lookup(id);
        for (const auto& g : grid)
            guarded(res, inst(id, g[0], g[1], g[2]), [&] {
                const auto rep = check_parametric_sampled(c, Params{g[0], g[1], g[2], std::nullopt}, 4);
                for (const auto& rc : rep.roots)
                    if (!rc.holds) return false;
                return !rep.roots.empty() && rep.passed();
            });
    }
    return res;
}

Result classical() {
    Result res;
    auto at = [&](const std::string& id, std::vector<std::pair<long, long>> prs, std::function<long(long)> target) {
        const Case& c = lookup("classical-" + id);
        for (const auto& [p, r] : prs)
            for (auto d : ds_of(c))
                guarded(res, inst(c.id, p, r, d), [&] {
                    const PadicCheck pc = check_classical(c, p, r, d);
                    return pc.passed() && pc.target >= target(r) && pc.achieved >= target(r);
                });
    };
    auto t3r = [](long r) { return 3 * r; };
    auto t3r2 = [](long r) { return 3 * r - 2; };
    for (const char* id : {"1.4", "1.5"}) at(id, {{5, 1}, {7, 1}, {5, 2}}, t3r);
    for (const char* id : {"1.6", "1.7"}) at(id, {{5, 1}, {5, 2}, {3, 1}}, t3r);
    for (const char* id : {"b3-new-1", "b3-new-2"}) at(id, {{5, 1}, {3, 2}}, t3r);
    for (const char* id : {"L3-1", "L3-2"}) at(id, {{5, 1}, {7, 1}}, t3r);
    at("e3", {{7, 1}}, t3r);
    at("f3", {{5, 1}}, t3r);
    for (const char* id : {"guo-3", "guo-4"}) at(id, {{5, 1}}, t3r2);
    for (const char* id : {"4k-1-1", "4k-1-2"}) at(id, {{5, 1}, {5, 2}}, t3r2);
    for (const char* id : {"RV1", "RV2", "RV3", "RV4"}) at(id, {{5, 1}}, [](long) { return 2L; });
    at("rv-1", {{5, 2}}, [](long r) { return 2 * r; });
    return res;
}

Result oracle() {
    Result res;
    long skipped = 0;
    for (const Case& c : builtin_cases()) {
        if (c.domain != Domain::q || c.is_conjecture() || c.kind == CaseKind::q_identity) continue;
        if (c.kind == CaseKind::parametric_roots && c.modulus.empty()) continue;
        for (long n = 3; n <= 9; ++n)
            for (auto d : ds_of(c)) {
                if (!admissible(c, n, 1, d)) continue;
                const Params p{n, 1, d, std::nullopt};
                guarded(res, inst(c.id, n, 1, d), [&] {
                    if (c.kind == CaseKind::q_congruence) {
                        const CrossCheck cc = oracle_crosscheck(c, p);
                        skipped += cc.skipped;
                        return cc.agree || cc.skipped;
                    }
                    // Three samples: Phi_3 | [9] leaves only three residues.
                    const auto a = check_parametric_sampled(c, p, 3, 200, {Engine::localized});
                    const auto b = check_parametric_sampled(c, p, 3, 200, {Engine::naive});
                    if (a.samples != b.samples) return false;
                    for (std::size_t i = 0; i < a.sampled.size(); ++i) {
                        if (b.sampled[i].skipped()) {
                            ++skipped;
                            return true;
                        }
                        const auto& x = a.sampled[i].factors;
                        const auto& y = b.sampled[i].factors;
                        if (x.size() != y.size()) return false;
                        for (std::size_t k = 0; k < x.size(); ++k)
                            if (x[k].status != y[k].status || x[k].achieved != y[k].achieved) return false;
                    }
                    return true;
                });
            }
    }
    // A skipped comparison is not an agreement.
    res.expect(skipped == 0, std::to_string(skipped) + " comparisons skipped by the degree guard");
    return res;
}

Result mutations() {
    Result res;
    auto fails_q = [](const Case& m) {
        for (long n : {5, 7})
            for (auto d : ds_of(m)) {
                try {
                    if (!check_congruence(m, Params{n, 1, d, std::nullopt}).passed()) return true;
                } catch (const std::exception&) {
                    // An error is not a failing factor.
                }
            }
        return false;
    };
    auto fails_classical = [](const Case& m) {
        for (long p : {5, 7})
            for (long r : {1, 2}) {
                try {
                    if (!check_classical(m, p, r).passed()) return true;
                } catch (const std::exception&) {
                    // An error is not a failing factor.
                }
            }
        return false;
    };
    for (const char* id : {"thm1.1a", "main-4", "classical-1.4"}) {
        const Case& c = lookup(id);
        const bool cl = c.domain == Domain::classical;
        // The first kind is a prefactor mutation: times q, or a sign flip where q is absent.
        for (Mutation m : {cl ? Mutation::prefactor_sign : Mutation::prefactor_times_q, Mutation::bracket_shift,
                           Mutation::exponent_shift}) {
            const auto mc = mutate(c, m);
            const std::string what = std::string(id) + "~" + to_string(m);
            res.expect(mc.has_value(), what + " not applicable");
            if (mc) res.expect(cl ? fails_classical(*mc) : fails_q(*mc), what + " still passes");
        }
    }
    return res;
}

// Non-gating except that everything must run, and the Dwork checks must pass.
Result conjectures(std::string& report) {
    Result res;
    long held = 0, failed = 0;
    for (const Case& c : builtin_cases()) {
        if (!c.is_conjecture()) continue;
        const auto at = smallest_instance(c);
        res.expect(at.has_value(), c.id + ": no admissible instance");
        if (!at) continue;
        try {
            bool ok;
            if (c.domain == Domain::classical) {
                const PadicCheck pc = check_classical(c, at->n, at->r, at->d);
                ok = pc.passed();
            } else {
                ok = check_congruence(c, Params{at->n, at->r, at->d, std::nullopt}).passed();
            }
            (ok ? held : failed) += 1;
            if (!ok) report += " " + inst(c.id, at->n, at->r, at->d) + " fails;";
        } catch (const std::exception& e) {
            res.expect(false, c.id + ": " + e.what());
        }
    }
    try {
        for (const auto& pc : dwork_quotient_check(lookup("classical-1.4"), 5, 2, 3))
            res.expect(pc.passed(), "Dwork (1.4) p=5 r=" + std::to_string(pc.r) + ": " + std::to_string(pc.achieved) + " < " +
                                        std::to_string(pc.target));
    } catch (const std::exception& e) {
        res.expect(false, std::string("Dwork: ") + e.what());
    }
    report = std::to_string(held) + " conjectures hold, " + std::to_string(failed) + " fail;" + report;
    return res;
}

}  // namespace

int main() {
    bool all = true;
    auto line = [&](int no, const char* name, double limit_s, const std::function<Result()>& f) {
        const auto t0 = Clock::now();
        Result res = f();
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_time = s < limit_s;
        const bool ok = res.ok && in_time && res.checks > 0;
        all = all && ok;
        std::printf("[%s] %d. %s: %ld checks, %.2f s (limit %.0f s)", ok ? "PASS" : "FAIL", no, name, res.checks, s, limit_s);
        if (!in_time) std::printf(", over the time limit");
        for (const auto& p : res.problems) std::printf("; %s", p.c_str());
        std::printf("\n");
    };
    line(1, "identity suite", 5, identities);
    line(2, "theorem regression r=1", 120, regression_r1);
    line(3, "theorem regression r=2", 900, regression_r2);
    line(4, "parametric and root suite", 600, parametric);
    line(5, "classical p-adic suite", 60, classical);
    line(6, "oracle equivalence n<=9, r=1", 600, oracle);
    line(7, "mutation sensitivity", 120, mutations);
    std::string conj;
    line(8, "conjecture exploration", 600, [&] {
        Result r = conjectures(conj);
        std::printf("    %s\n", conj.c_str());
        return r;
    });
    return all ? 0 : 1;
}
