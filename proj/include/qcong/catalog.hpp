#pragma once

// Case definitions: q-congruences, exact q-identities, parametric (a-slot)
// statements, classical p-adic congruences and conjectures, all written in
// the expression language of expr.hpp.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/expr.hpp"
#include "qcong/qkit.hpp"

namespace qcong {

class CaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CaseKind { q_congruence, q_identity, parametric_roots, classical_padic, conjecture };
enum class Domain { q, classical };

std::string to_string(CaseKind k);
CaseKind case_kind_from_string(const std::string& s);

struct Anchor {
    std::string label;    // equation label, e.g. "q4a"
    std::string result;   // e.g. "Theorem 1.1"
    std::string quote;

    bool operator==(const Anchor&) const = default;
};

/// A truncated sum: sum_{k=0}^{bound} summand.
struct SumSpec {
    SourceExpr summand;
    SourceExpr bound;

    bool operator==(const SumSpec&) const = default;
};

/// One factor of a symbolic modulus, optionally a product over j in [lo, hi].
/// kind "qint" means [arg]_{q^scale}, "cyc" means Phi_arg(q^scale); a
/// negative scale stands for q -> -q^{|scale|}.
struct ModulusTerm {
    std::string kind = "cyc";
    SourceExpr arg;
    SourceExpr scale = "1";
    SourceExpr power = "1";
    std::optional<std::pair<SourceExpr, SourceExpr>> j_range;

    bool operator==(const ModulusTerm&) const = default;
};

/// The first variant whose `when` constraints all hold is used.
struct ModulusVariant {
    std::vector<std::string> when;
    std::vector<ModulusTerm> terms;

    bool operator==(const ModulusVariant&) const = default;
};

/// Roots a = q^{+-exponent(j)} of the parametric part of a modulus, for j in
/// [lo, hi]: prod (1 - a q^{x}) (a - q^{x}).
struct RootSpec {
    SourceExpr exponent;
    SourceExpr lo;
    SourceExpr hi;

    bool operator==(const RootSpec&) const = default;
};

struct Case {
    std::string id;
    CaseKind kind = CaseKind::q_congruence;
    Domain domain = Domain::q;
    Anchor anchor;
    std::string description;

    std::vector<long> d_values;   // empty: no d parameter
    long r_min = 1;
    std::optional<long> r_max;
    std::vector<std::string> constraints;   // over n (or p), r, d

    SumSpec lhs;
    SourceExpr prefactor = "1";
    // Right-hand sum. An empty summand means "the lhs summand with q -> q^scale"
    // (for classical cases: the lhs summand). An empty bound means no sum.
    SumSpec rhs;
    SourceExpr rhs_scale = "n";

    std::vector<ModulusVariant> modulus;
    std::optional<RootSpec> roots;

    // Classical cases: proven target and, when different, the conjectured one.
    SourceExpr target;
    SourceExpr conjectured_target;
    std::string q_analogue;

    bool operator==(const Case&) const = default;

    bool is_conjecture() const { return kind == CaseKind::conjecture; }
    bool has_d() const { return !d_values.empty(); }
    bool has_a_slot() const;
    bool has_rhs_sum() const { return !rhs.bound.empty(); }
    /// The name of the main integer parameter: "p" for classical, else "n".
    const char* main_var() const { return domain == Domain::classical ? "p" : "n"; }
};

bool is_prime(long p);

/// Environment for a concrete instance; d is omitted when the case has none.
IntEnv instance_env(const Case& c, long n, long r, std::optional<long> d);

/// Checks r range, d domain and constraints; throws CaseError naming the
/// first violated condition.
void require_admissible(const Case& c, long n, long r, std::optional<long> d);
bool admissible(const Case& c, long n, long r, std::optional<long> d);

/// Normalized modulus at an instance; j ranges are expanded.
CyclotomicMultiset instantiate_modulus(const Case& c, const IntEnv& env);
std::vector<ModulusFactor> modulus_factors(const Case& c, const IntEnv& env);

/// Smallest admissible (n, r) with 3 <= n <= limit (prime n for classical
/// cases), using the largest d when the case has one.
struct Instance {
    long n = 0;
    long r = 1;
    std::optional<long> d;
};
std::optional<Instance> smallest_instance(const Case& c, long limit = 60);

/// Static checks performed at load: parse trees present, d values positive,
/// bounds and q-exponent positions integral at a few admissible instances.
void validate_case(const Case& c);

const std::vector<Case>& builtin_cases();
const Case* find_case(const std::vector<Case>& cases, const std::string& id);
const Case& lookup(const std::string& id);   // builtins; throws CaseError

/// Systematic perturbations used for mutation testing: omega -> q*omega,
/// omega -> -omega, the first linear bracket c*k+b -> (c+1)*k+b, and the first
/// q-power exponent (classical: the first k-dependent power) raised by one.
/// Only the left-hand summand is touched. Returns nullopt when the case has
/// nothing to mutate.
enum class Mutation { prefactor_times_q, prefactor_sign, bracket_shift, exponent_shift };
std::string to_string(Mutation m);
std::optional<Case> mutate(const Case& c, Mutation m);

std::vector<Case> load_cases(const std::string& path);
void save_cases(const std::string& path, const std::vector<Case>& cases);
std::string cases_to_json(const std::vector<Case>& cases);
std::vector<Case> cases_from_json(const std::string& text, const std::string& origin = "<string>");

}  // namespace qcong
