#include "qcong/catalog.hpp"

#include <algorithm>
#include <functional>

namespace qcong {

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::q_congruence: return "q_congruence";
        case CaseKind::q_identity: return "q_identity";
        case CaseKind::parametric_roots: return "parametric_roots";
        case CaseKind::classical_padic: return "classical_padic";
        case CaseKind::conjecture: return "conjecture";
    }
    return "?";
}

CaseKind case_kind_from_string(const std::string& s) {
    if (s == "q_congruence") return CaseKind::q_congruence;
    if (s == "q_identity") return CaseKind::q_identity;
    if (s == "parametric_roots") return CaseKind::parametric_roots;
    if (s == "classical_padic") return CaseKind::classical_padic;
    if (s == "conjecture") return CaseKind::conjecture;
    throw CaseError("unknown case kind '" + s + "'");
}

bool Case::has_a_slot() const {
    auto uses_a = [](const SourceExpr& e) { return !e.empty() && e.tree->mentions("a"); };
    return uses_a(lhs.summand) || uses_a(rhs.summand) || uses_a(prefactor);
}

IntEnv instance_env(const Case& c, long n, long r, std::optional<long> d) {
    IntEnv env{{c.main_var(), n}, {"r", r}};
    if (d) env["d"] = *d;
    return env;
}

namespace {

std::string describe(const Case& c, long n, long r, std::optional<long> d) {
    std::string s = c.id + " at " + c.main_var() + "=" + std::to_string(n) + ", r=" + std::to_string(r);
    if (d) s += ", d=" + std::to_string(*d);
    return s;
}

}  // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

void require_admissible(const Case& c, long n, long r, std::optional<long> d) {
    if (r < c.r_min || (c.r_max && r > *c.r_max))
        throw CaseError(describe(c, n, r, d) + ": r outside the stated range");
    if (c.has_d()) {
        if (!d) throw CaseError(describe(c, n, r, d) + ": parameter d is required");
        if (std::find(c.d_values.begin(), c.d_values.end(), *d) == c.d_values.end())
            throw CaseError(describe(c, n, r, d) + ": d outside its declared domain");
    } else if (d) {
        throw CaseError(describe(c, n, r, d) + ": case has no d parameter");
    }
    if (c.domain == Domain::classical && !is_prime(n))
        throw CaseError(describe(c, n, r, d) + ": p must be prime");
    const IntEnv env = instance_env(c, n, r, d);
    for (const auto& text : c.constraints) {
        bool ok = false;
        try {
            ok = Constraint::parse(text).holds(env);
        } catch (const NonIntegral&) {
            ok = false;
        }
        if (!ok) throw CaseError(describe(c, n, r, d) + ": constraint " + text + " violated");
    }
}

bool admissible(const Case& c, long n, long r, std::optional<long> d) {
    try {
        require_admissible(c, n, r, d);
        return true;
    } catch (const CaseError&) {
        return false;
    }
}

std::vector<ModulusFactor> modulus_factors(const Case& c, const IntEnv& env) {
    const ModulusVariant* chosen = nullptr;
    for (const auto& v : c.modulus) {
        bool ok = true;
        for (const auto& w : v.when) ok = ok && Constraint::parse(w).holds(env);
        if (ok) {
            chosen = &v;
            break;
        }
    }
    std::vector<ModulusFactor> out;
    if (!chosen) return out;
    for (const auto& t : chosen->terms) {
        auto push = [&](const IntEnv& e) {
            ModulusFactor f;
            f.kind = t.kind == "qint" ? ModulusFactor::Kind::q_integer : ModulusFactor::Kind::cyclotomic;
            f.arg = t.arg.eval(e);
            f.scale = t.scale.eval(e);
            f.power = t.power.eval(e);
            out.push_back(f);
        };
        if (!t.j_range) {
            push(env);
            continue;
        }
        IntEnv e = env;
        const long lo = t.j_range->first.eval(env), hi = t.j_range->second.eval(env);
        for (long j = lo; j <= hi; ++j) {
            e["j"] = j;
            push(e);
        }
    }
    return out;
}

CyclotomicMultiset instantiate_modulus(const Case& c, const IntEnv& env) {
    return normalize_modulus(modulus_factors(c, env));
}

std::optional<Instance> smallest_instance(const Case& c, long limit) {
    std::optional<long> d;
    if (c.has_d()) d = *std::max_element(c.d_values.begin(), c.d_values.end());
    for (long r = c.r_min; r <= c.r_min + 1; ++r) {
        for (long n = 2; n <= limit; ++n) {
            if (admissible(c, n, r, d)) return Instance{n, r, d};
        }
    }
    return std::nullopt;
}

namespace {

// Integer-context positions of the value language, see checker/term.cpp.
void visit_int_positions(const Expr& e, const std::function<void(const Expr&)>& f) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return;
        case K::symbol:
            if (e.name != "q" && e.name != "a") f(e);
            return;
        case K::pow:
            visit_int_positions(*e.args[0], f);
            f(*e.args[1]);
            return;
        case K::call: {
            const std::string& n = e.name;
            if (n == "poch" || n == "rf") {
                if (e.args.size() != (n == "poch" ? 3u : 2u)) throw CaseError(n + "() has the wrong number of arguments");
                for (std::size_t i = 0; i + 1 < e.args.size(); ++i) visit_int_positions(*e.args[i], f);
                f(*e.args.back());
                return;
            }
            if (n == "qint" || n == "qbinom" || n == "kron" || n == "binom" || n == "fact") {
                for (const auto& a : e.args) f(*a);
                return;
            }
            throw CaseError("unknown function " + n + "()");
        }
        default:
            for (const auto& a : e.args) visit_int_positions(*a, f);
    }
}

void check_sum_positions(const Case& c, const SourceExpr& summand, long bound, IntEnv env, const std::string& where) {
    if (summand.empty()) return;
    for (long k = 0; k <= bound; ++k) {
        env["k"] = k;
        visit_int_positions(*summand.tree, [&](const Expr& x) {
            try {
                eval_int(x, env);
            } catch (const NonIntegral& err) {
                throw CaseError(c.id + ": " + where + " at k=" + std::to_string(k) + ": " + err.what());
            }
        });
    }
}

}  // namespace

void validate_case(const Case& c) {
    if (c.id.empty()) throw CaseError("case without id");
    if (c.lhs.summand.empty() || c.lhs.bound.empty()) throw CaseError(c.id + ": lhs summand and bound are required");
    for (long d : c.d_values)
        if (d <= 0) throw CaseError(c.id + ": d values must be positive");
    for (const auto& text : c.constraints) {
        try {
            Constraint::parse(text);
        } catch (const ParseError& e) {
            throw CaseError(c.id + ": constraint '" + text + "': " + e.what());
        }
    }
    const bool classical = c.domain == Domain::classical;
    if (classical && c.target.empty()) throw CaseError(c.id + ": classical case needs a target");
    if (!classical && c.kind != CaseKind::q_identity && !c.roots && c.modulus.empty())
        throw CaseError(c.id + ": congruence case needs a modulus or roots");
    if (c.kind == CaseKind::parametric_roots && !c.roots) throw CaseError(c.id + ": parametric case needs roots");

    // Integrality at a few admissible instances for every declared d.
    std::vector<std::optional<long>> ds;
    if (c.has_d())
        for (long d : c.d_values) ds.push_back(d);
    else
        ds.push_back(std::nullopt);
    int checked = 0;
    for (long r = c.r_min; r <= c.r_min + 1 && (!c.r_max || r <= *c.r_max); ++r) {
        int found = 0;
        for (long n = 2; n <= 60 && found < 2; ++n) {
            bool any = false;
            for (const auto& d : ds) {
                if (!admissible(c, n, r, d)) continue;
                any = true;
                const IntEnv env = instance_env(c, n, r, d);
                auto eval_bound = [&](const SourceExpr& b, const char* what) -> long {
                    long v = 0;
                    try {
                        v = b.eval(env);
                    } catch (const NonIntegral& err) {
                        std::string domain;
                        for (long x : c.d_values) domain += (domain.empty() ? "" : ",") + std::to_string(x);
                        throw CaseError(c.id + ": " + what + " bound " + b.text + " is not integral at " + c.main_var() +
                                        "=" + std::to_string(n) + ", r=" + std::to_string(r) +
                                        (d ? ", d=" + std::to_string(*d) + " (d domain {" + domain + "})" : "") +
                                        ": " + err.what());
                    }
                    if (v < -1) throw CaseError(c.id + ": " + what + " bound " + b.text + " is negative");
                    return v;
                };
                const long lb = eval_bound(c.lhs.bound, "lhs");
                check_sum_positions(c, c.lhs.summand, std::min(lb, 40L), env, "lhs summand");
                if (c.has_rhs_sum()) {
                    const long rb = eval_bound(c.rhs.bound, "rhs");
                    check_sum_positions(c, c.rhs.summand, std::min(rb, 40L), env, "rhs summand");
                }
                try {
                    IntEnv e0 = env;
                    e0["k"] = 0;
                    visit_int_positions(*c.prefactor.tree, [&](const Expr& x) { eval_int(x, e0); });
                    if (classical) {
                        c.target.eval(env);
                        if (!c.conjectured_target.empty()) c.conjectured_target.eval(env);
                    } else if (!c.modulus.empty()) {
                        modulus_factors(c, env);
                    }
                    if (c.roots) {
                        c.roots->lo.eval(env);
                        c.roots->hi.eval(env);
                    }
                } catch (const NonIntegral& err) {
                    throw CaseError(c.id + ": " + err.what());
                }
            }
            if (any) {
                ++found;
                ++checked;
            }
        }
    }
    if (checked == 0) throw CaseError(c.id + ": no admissible instance with n <= 60");
}

const Case* find_case(const std::vector<Case>& cases, const std::string& id) {
    for (const auto& c : cases)
        if (c.id == id) return &c;
    return nullptr;
}

const Case& lookup(const std::string& id) {
    const Case* c = find_case(builtin_cases(), id);
    if (!c) throw CaseError("unknown case id '" + id + "'");
    return *c;
}

}  // namespace qcong
