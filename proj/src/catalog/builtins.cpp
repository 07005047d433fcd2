#include "qcong/catalog.hpp"

namespace qcong {

namespace {

ModulusTerm qint_term(const char* arg, const char* scale = "1") {
    ModulusTerm t;
    t.kind = "qint";
    t.arg = arg;
    t.scale = scale;
    return t;
}

ModulusTerm cyc_term(const char* arg, const char* scale = "1", const char* power = "1") {
    ModulusTerm t;
    t.kind = "cyc";
    t.arg = arg;
    t.scale = scale;
    t.power = power;
    return t;
}

ModulusTerm cyc_range(const char* arg, const char* lo, const char* hi, const char* scale = "1",
                      const char* power = "2") {
    ModulusTerm t = cyc_term(arg, scale, power);
    t.j_range = std::make_pair(SourceExpr(lo), SourceExpr(hi));
    return t;
}

// [n^r] prod_{j=1}^r Phi_{n^j}(q)^2
std::vector<ModulusVariant> standard_modulus() {
    return {ModulusVariant{{}, {qint_term("n^r"), cyc_range("n^j", "1", "r")}}};
}

std::vector<ModulusVariant> single(std::vector<ModulusTerm> terms) {
    return {ModulusVariant{{}, std::move(terms)}};
}

struct Builder {
    std::vector<Case> out;

    Case& add(const char* id, CaseKind kind, Anchor anchor) {
        Case c;
        c.id = id;
        c.kind = kind;
        c.anchor = std::move(anchor);
        out.push_back(std::move(c));
        return out.back();
    }

    Case& classical(const char* id, CaseKind kind, Anchor anchor) {
        Case& c = add(id, kind, std::move(anchor));
        c.domain = Domain::classical;
        c.rhs_scale = "1";
        return c;
    }
};

void q_theorems(Builder& b) {
    const char* s11 = "qint(8k+1) poch(q,q^2,k)^2 poch(q,q^2,2k) / (poch(q^6,q^6,k)^2 poch(q^2,q^2,2k)) q^(2k^2)";
    const char* w11 = "q^((1-n)/2) qint(n) kron(-3,n)";
    {
        Case& c = b.add("thm1.1a", CaseKind::q_congruence,
                        {"q4a", "Theorem 1.1", "Let n>1 be an integer coprime with 6 and let r>=1"});
        c.description = "q-analogue of (1.4); d=2 is the printed truncation, d=1 coincides with thm1.1b";
        c.d_values = {1, 2};
        c.constraints = {"gcd(n,6)==1", "n>1"};
        c.lhs = {s11, "(n^r-1)/d"};
        c.prefactor = w11;
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("thm1.1b", CaseKind::q_congruence,
                        {"q4b", "Theorem 1.1", "Let n>1 be an integer coprime with 6 and let r>=1"});
        c.description = "q-analogue of (1.5), truncation n^r-1";
        c.constraints = {"gcd(n,6)==1", "n>1"};
        c.lhs = {s11, "n^r-1"};
        c.prefactor = w11;
        c.rhs.bound = "n^(r-1)-1";
        c.modulus = standard_modulus();
    }
    const char* s12 = "qint(3k+1) poch(q,q^2,k)^3 q^(-binom(k+1,2)) / (poch(q,q,k)^2 poch(q^2,q^2,k))";
    {
        Case& c = b.add("thm1.2a", CaseKind::q_congruence,
                        {"q-div-WZ-1", "Theorem 1.2", "Let n>1 be odd and r>=1"});
        c.description = "d=2 is the printed truncation, d=1 coincides with thm1.2b";
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {s12, "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("thm1.2b", CaseKind::q_congruence,
                        {"q-div-WZ-2", "Theorem 1.2", "Let n>1 be odd and r>=1"});
        c.constraints = {"odd", "n>1"};
        c.lhs = {s12, "n^r-1"};
        c.prefactor = "q^((1-n)/2) qint(n)";
        c.rhs.bound = "n^(r-1)-1";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("lem2.2", CaseKind::q_identity,
                        {"eq:lem3.1", "Lemma 2.2", "Let n be a positive odd integer"});
        c.constraints = {"odd", "n>1"};
        c.lhs = {"qint(8k+1) poch(q^(1-n),q^2,k) poch(q^(1+n),q^2,k) poch(q,q^2,2k) / "
                 "(poch(q^(6-n),q^6,k) poch(q^(6+n),q^6,k) poch(q^2,q^2,2k)) q^(2k^2)",
                 "(n-1)/2"};
        c.prefactor = w11;
    }
    {
        Case& c = b.add("thm2.3", CaseKind::parametric_roots,
                        {"eq:main-1-a", "Theorem 2.3", "we only need to prove that both sides of (eq:main-1-a) are identical"});
        c.description = "parametric form of Theorem 1.1; roots give eq:main-a-n";
        c.d_values = {1, 2};
        c.constraints = {"gcd(n,6)==1", "n>1"};
        c.lhs = {"qint(8k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q,q^2,2k) / "
                 "(poch(a q^6,q^6,k) poch(q^6/a,q^6,k) poch(q^2,q^2,2k)) q^(2k^2)",
                 "(n^r-1)/d"};
        c.prefactor = w11;
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "0", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("lem-3-2", CaseKind::q_identity, {"lem-3-2", "Lemma 2.4", "Let n be a positive odd integer"});
        c.constraints = {"odd", "n>1"};
        c.lhs = {"qint(3k+1) poch(q^(1-n),q^2,k) poch(q^(1+n),q^2,k) poch(q,q^2,k) / "
                 "(poch(q^(1-n),q,k) poch(q^(1+n),q,k) poch(q^2,q^2,k)) q^(-binom(k+1,2))",
                 "(n-1)/2"};
        c.prefactor = "q^((1-n)/2) qint(n)";
    }
    {
        Case& c = b.add("main-2-par", CaseKind::parametric_roots,
                        {"eq:main-2-a", "Theorem main-2-par", "parametric generalization of Theorem 1.2"});
        c.description = "roots give eq:main-b-n";
        c.d_values = {1, 2};
        c.constraints = {"gcd(n,6)==1", "n>1"};
        c.lhs = {"qint(3k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q,q^2,k) / "
                 "(poch(a q,q,k) poch(q/a,q,k) poch(q^2,q^2,k)) q^(-binom(k+1,2))",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "ceil(n^(r-1)-1, 2d)", "(n^(r-1)-1)/d"};
    }
}

void section3(Builder& b) {
    // main-new
    {
        Case& c = b.add("main-new", CaseKind::q_congruence,
                        {"eq:q-div-new-1", "Theorem main-new", "supercongruences may have different q-analogues"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"qint(3k+1) poch(q,q^2,k)^3 poch(-1,q,k) q^k / (poch(q,q,k)^3 poch(-q^2,q,2k))", "(n^r-1)/d"};
        c.prefactor = "(1+q)/(1+q^n) qint(n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    const char* snew_a =
        "qint(3k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q,q^2,k) poch(-1,q,k) / "
        "(poch(a q,q,k) poch(q/a,q,k) poch(q,q,k) poch(-q^2,q,2k)) q^k";
    {
        Case& c = b.add("main-new-par", CaseKind::parametric_roots,
                        {"main-new-a", "Theorem main-new", "we can establish the following parametric generalization"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {snew_a, "(n^r-1)/d"};
        c.prefactor = "(1+q)/(1+q^n) qint(n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "ceil(n^(r-1)-1, 2d)", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("div-3-new-root", CaseKind::q_identity,
                        {"eq:div-3-new", "Theorem main-new",
                         "the left-hand side of (eq:div-3-new) is congruent to 0 modulo [n]"});
        c.description = "eq:div-3-new at a=q^-n; the text states the sum vanishes";
        c.constraints = {"odd", "n>1"};
        c.lhs = {"qint(3k+1) poch(q^(1-n),q^2,k) poch(q^(1+n),q^2,k) poch(q,q^2,k) poch(-1,q,k) / "
                 "(poch(q^(1-n),q,k) poch(q^(1+n),q,k) poch(q,q,k) poch(-q^2,q,2k)) q^k",
                 "(n-1)/2"};
        c.prefactor = "(1+q)/(1+q^n) qint(n)";
    }

    // main-3
    {
        Case& c = b.add("main-3", CaseKind::q_congruence,
                        {"eq:div-3-2", "Theorem main-3", "q-generalization of the above two supercongruences"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(3k+1) poch(q,q^2,k)^3 poch(-q,q,k) / (poch(q,q,k)^3 poch(-q^2,q^2,k)) "
                 "q^(-binom(k+1,2))",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("main-3-par", CaseKind::parametric_roots,
                        {"main-3-a", "Theorem main-3", "we may establish a parametric generalization"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(3k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q,q^2,k) poch(-q,q,k) / "
                 "(poch(a q,q,k) poch(q/a,q,k) poch(q,q,k) poch(-q^2,q^2,k)) q^(-binom(k+1,2))",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "ceil(n^(r-1)-1, 2d)", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("div-3-3-root", CaseKind::q_identity,
                        {"eq:div-3-3", "Theorem main-3", "the left-hand side of (eq:div-3-2) is congruent to 0 modulo [n]"});
        c.description = "eq:div-3-3 at a=q^-n; the text states the sum vanishes";
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(3k+1) poch(q^(1-n),q^2,k) poch(q^(1+n),q^2,k) poch(q,q^2,k) poch(-q,q,k) / "
                 "(poch(q^(1-n),q,k) poch(q^(1+n),q,k) poch(q,q,k) poch(-q^2,q^2,k)) q^(-binom(k+1,2))",
                 "(n-1)/2"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
    }

    // main-4
    {
        Case& c = b.add("main-4", CaseKind::q_congruence,
                        {"q-b3", "Theorem main-4", "Let n>1 be odd and let r>=1"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(q,q^2,k)^2 poch(q^2,q^4,k) / (poch(q^2,q^2,k)^2 poch(q^4,q^4,k))",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("main-4-par", CaseKind::parametric_roots,
                        {"eq:main-4-a", "Theorem main-4", "we can prove the following parametric version"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q^2,q^4,k) / "
                 "(poch(a q^2,q^2,k) poch(q^2/a,q^2,k) poch(q^4,q^4,k))",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "0", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("qb2-new-root", CaseKind::q_identity,
                        {"qb2-new", "Theorem main-4", "the left-hand side of (qb2-new) is congruent to 0 modulo [n]"});
        c.description = "qb2-new at a=q^-n; the text states the sum vanishes";
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(q^(1-n),q^2,k) poch(q^(1+n),q^2,k) poch(q^2,q^4,k) / "
                 "(poch(q^(2-n),q^2,k) poch(q^(2+n),q^2,k) poch(q^4,q^4,k))",
                 "(n-1)/2"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-1,n)";
    }

    // main-5
    {
        Case& c = b.add("main-5", CaseKind::q_congruence,
                        {"eq:div-2-1", "Theorem main-5", "We confirm the supercongruences (L3-1) and (L3-2)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(6k+1) poch(q,q^2,k)^3 poch(-q^2,q^4,k) / (poch(q^4,q^4,k)^3 poch(-q,q^2,k)) q^(k^2)",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-2,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("main-5-par", CaseKind::parametric_roots,
                        {"eq:main-5-a", "Theorem main-5", "we can prove the following parametric version"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(6k+1) poch(a q,q^2,k) poch(q/a,q^2,k) poch(q,q^2,k) poch(-q^2,q^4,k) / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^4,q^4,k) poch(-q,q^2,k)) q^(k^2)",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-2,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(2j+1)n", "0", "(n^(r-1)-1)/d"};
    }

    // main-e, main-f
    {
        Case& c = b.add("main-e", CaseKind::q_congruence,
                        {"q-e3", "Theorem main-e", "Let n>1 be an integer with n = 1 (mod 6)"});
        c.d_values = {1, 3};
        c.constraints = {"n%6==1", "n>1"};
        c.lhs = {"(-1)^k qint(6k+1,2) poch(q^2,q^6,k)^3 poch(-q^3,q^6,k) / (poch(q^6,q^6,k)^3 poch(-q^5,q^6,k)) q^k",
                 "(n^r-1)/d"};
        c.prefactor = "q^(1-n) qint(n,2)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r", "2"), cyc_range("n^j", "1", "r", "2")});
    }
    {
        Case& c = b.add("main-e-par", CaseKind::parametric_roots,
                        {"q-e3", "Theorem main-e", "we can produce a generalization of (q-e3) with an extra parameter a"});
        c.d_values = {1, 3};
        c.constraints = {"n%6==1", "n>1"};
        c.lhs = {"(-1)^k qint(6k+1,2) poch(a q^2,q^6,k) poch(q^2/a,q^6,k) poch(q^2,q^6,k) poch(-q^3,q^6,k) / "
                 "(poch(a q^6,q^6,k) poch(q^6/a,q^6,k) poch(q^6,q^6,k) poch(-q^5,q^6,k)) q^k",
                 "(n^r-1)/d"};
        c.prefactor = "q^(1-n) qint(n,2)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r", "2")});
        c.roots = RootSpec{"(6j+2)n", "0", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("main-f", CaseKind::q_congruence,
                        {"q-f3", "Theorem main-f", "Let n>1 be an integer with n = 1 (mod 4)"});
        c.d_values = {1, 4};
        c.constraints = {"n%4==1", "n>1"};
        c.lhs = {"(-1)^k qint(8k+1) poch(q,q^4,k)^3 poch(-q^2,q^4,k) / (poch(q^4,q^4,k)^3 poch(-q^3,q^4,k)) q^k",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-2,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("main-f-par", CaseKind::parametric_roots,
                        {"q-f3", "Theorem main-f", "we can produce a generalization of (q-e3) with an extra parameter a"});
        c.d_values = {1, 4};
        c.constraints = {"n%4==1", "n>1"};
        c.lhs = {"(-1)^k qint(8k+1) poch(a q,q^4,k) poch(q/a,q^4,k) poch(q,q^4,k) poch(-q^2,q^4,k) / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^4,q^4,k) poch(-q^3,q^4,k)) q^k",
                 "(n^r-1)/d"};
        c.prefactor = "q^((1-n)/2) qint(n) kron(-2,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r")});
        c.roots = RootSpec{"(4j+1)n", "0", "(n^(r-1)-1)/d"};
    }
}

void section3_cubes(Builder& b) {
    const char* w41 = "q^(1-n) qint(n,2) kron(-1,n) (1 - (1+q^2)(1-a q^2)(1-q^2/a)/((1+q^4)(1-q)^2))";
    {
        Case& c = b.add("four-1", CaseKind::parametric_roots,
                        {"eq:four-1", "Lemma lem:new-1", "modulo Phi_n(q^2)(1-aq^{2n})(a-q^{2n})"});
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1,2) qint(4k+1)^2 poch(a q^2,q^4,k) poch(q^2/a,q^4,k) poch(q^4,q^8,k) / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^8,q^8,k)) q^(-4k)",
                 "(n-1)/2"};
        c.prefactor = w41;
        c.r_max = 1;
        c.modulus = single({cyc_term("n", "2")});
        c.roots = RootSpec{"2n", "0", "0"};
    }
    const char* s_new1 =
        "(-1)^k qint(4k+1,2) qint(4k+1)^2 poch(q^2,q^4,k)^2 poch(q^4,q^8,k) / "
        "(poch(q^4,q^4,k)^2 poch(q^8,q^8,k)) q^(-4k)";
    {
        Case& c = b.add("new-1-1", CaseKind::q_congruence,
                        {"new-1-1", "Theorem new-1 (first)", "the complicated q-analogue of (eq:guo-3)"});
        c.description = "stated for r>=2; r=1 is checked as well";
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {s_new1, "(n^r-1)/d"};
        c.prefactor = "q^(2-2n) qint(n,2) kron(-1,n) (1+q+q^2)(1+q^(4n)) / ((1+q^4)(1+q^n+q^(2n)))";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = {
            ModulusVariant{{"r==1"}, {qint_term("n^r", "2"), cyc_term("n", "-1", "2")}},
            ModulusVariant{{"n>3"},
                           {qint_term("n^r", "2"), cyc_term("n", "-1", "2"), cyc_range("n^j", "2", "r", "2")}},
            ModulusVariant{{"n==3"},
                           {qint_term("n^r", "2"), cyc_term("n", "2"), cyc_term("n^2", "2"), cyc_term("n", "-1"),
                            cyc_term("n^2", "-1"), cyc_range("n^j", "3", "r", "2")}}};
    }
    {
        Case& c = b.add("new-1-2", CaseKind::parametric_roots,
                        {"new-1-2", "Theorem new-1 (first)", "we can prove the following parametric version of (new-1-1)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1,2) qint(4k+1)^2 poch(a q^2,q^4,k) poch(q^2/a,q^4,k) poch(q^4,q^8,k) / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^8,q^8,k)) q^(-4k)",
                 "(n^r-1)/d"};
        c.prefactor = std::string(w41) +
                      " / (1 - (1+q^(2n))(1-a q^(2n))(1-q^(2n)/a)/((1+q^(4n))(1-q^n)^2))";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r", "2")});
        c.roots = RootSpec{"(4j+2)n", "0", "(n^(r-1)-1)/d"};
    }
    {
        Case& c = b.add("new-1-3", CaseKind::q_congruence,
                        {"new-1-3", "Theorem new-1 (first)", "= 0 (mod [n]_{q^2}) for d=1,2"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.r_max = 1;
        c.lhs = {s_new1, "(n-1)/d"};
        c.prefactor = "0";
        c.modulus = single({qint_term("n", "2")});
    }
    const char* s_new2 = "qint(4k+1,2) qint(4k+1)^2 poch(q^2,q^4,k)^4 / poch(q^4,q^4,k)^4 q^(-4k)";
    {
        Case& c = b.add("new-2-1", CaseKind::q_congruence,
                        {"new-2-1", "Theorem new-1 (second)", "Let n>1 be an odd integer and let r>=1"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {s_new2, "(n^r-1)/d"};
        c.prefactor = "q^(2-2n) qint(n,2) (1+q^(2n))/(1+q^2)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r", "2"), cyc_term("n", "-1", "2"), cyc_range("n^j", "2", "r", "2")});
    }
    {
        Case& c = b.add("new-2-2", CaseKind::parametric_roots,
                        {"new-2-2", "Theorem new-1 (second)", "the following parametric generalization of (new-2-1)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"qint(4k+1,2) qint(4k+1)^2 poch(a q^2,q^4,k) poch(q^2/a,q^4,k) poch(q^2,q^4,k)^2 / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^4,q^4,k)^2) q^(-4k)",
                 "(n^r-1)/d"};
        c.prefactor =
            "q^(1-n) qint(n,2) (1 - (1-a q^2)(1-q^2/a)/((1+q^2)(1-q)^2)) / "
            "(1 - (1-a q^(2n))(1-q^(2n)/a)/((1+q^(2n))(1-q^n)^2))";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({qint_term("n^r", "2")});
        c.roots = RootSpec{"(4j+2)n", "0", "(n^(r-1)-1)/d"};
    }
    const char* s4k = "(-1)^k qint(4k-1,2) qint(4k-1)^2 poch(q^(-2),q^4,k)^2 poch(q^(-4),q^8,k) / "
                      "(poch(q^4,q^4,k)^2 poch(q^8,q^8,k)) q^(4k)";
    const char* w4k = "q^(2n-2) qint(n,2) kron(-1,n) (1+q+q^2)(1+q^(2n))^2 / ((1+q^2)^2 (1+q^n+q^(2n)))";
    auto lem4k_modulus = [] {
        return std::vector<ModulusVariant>{
            ModulusVariant{{"r==1"}, {qint_term("n^r", "2")}},
            ModulusVariant{{"n>3"}, {qint_term("n^r", "2"), cyc_range("n^j", "2", "r", "2")}},
            ModulusVariant{{"n==3"},
                           {qint_term("n^r", "2"), cyc_term("n"), cyc_term("n^2", "2"), cyc_term("n^2", "-1"),
                            cyc_range("n^j", "3", "r", "2")}}};
    };
    {
        Case& c = b.add("lem-4k-2a", CaseKind::q_congruence,
                        {"eq:lem-4k-2", "Theorem eq:lem-4k-2", "(M_1,M_2)=((n^r+1)/2,(n^{r-1}+1)/2)"});
        c.description = "stated for r>=2; r=1 is checked as well";
        c.constraints = {"odd", "n>1"};
        c.lhs = {s4k, "(n^r+1)/2"};
        c.prefactor = w4k;
        c.rhs.bound = "(n^(r-1)+1)/2";
        c.modulus = lem4k_modulus();
    }
    {
        Case& c = b.add("lem-4k-2b", CaseKind::q_congruence,
                        {"eq:lem-4k-2", "Theorem eq:lem-4k-2", "(M_1,M_2)=(n^r-1,n^{r-1}-1)"});
        c.description = "stated for r>=2; r=1 is checked as well";
        c.constraints = {"odd", "n>1"};
        c.lhs = {s4k, "n^r-1"};
        c.prefactor = w4k;
        c.rhs.bound = "n^(r-1)-1";
        c.modulus = lem4k_modulus();
    }
    {
        Case& c = b.add("lem-4k-1", CaseKind::parametric_roots,
                        {"eq:lem-4k-1", "Lemma lem:new-2", "modulo Phi_n(q^2)(1-aq^{2n})(a-q^{2n})"});
        c.constraints = {"odd", "n>1"};
        c.r_max = 1;
        c.lhs = {"(-1)^k qint(4k-1,2) qint(4k-1)^2 poch(a q^(-2),q^4,k) poch(q^(-2)/a,q^4,k) poch(q^(-4),q^8,k) / "
                 "(poch(a q^4,q^4,k) poch(q^4/a,q^4,k) poch(q^8,q^8,k)) q^(4k)",
                 "(n+1)/2"};
        c.prefactor = "-2 q^(-n-3) qint(n,2) (1+q^4) / ((1+a q^2)(1+q^2/a)) kron(-1,n) "
                      "(1 - (1+q^2)(1-a q^(-2))(1-q^(-2)/a) q^4/((1+q^4)(1-q)^2))";
        c.modulus = single({cyc_term("n", "2")});
        c.roots = RootSpec{"2n", "0", "0"};
    }
}

void rv_family(Builder& b) {
    {
        Case& c = b.add("q-rv", CaseKind::q_congruence,
                        {"q-rv", "Theorem q-rv", "a q-Dwork-type generalization of (q-rv) for m=2 and s=1"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"2 poch(q,q^2,k)^2 q^(2k) / (poch(q^2,q^2,k)^2 (1+q^(2k)))", "(n^r-1)/d"};
        c.prefactor = "kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_range("n^j", "1", "r")});
    }
    {
        Case& c = b.add("q-rv-par", CaseKind::parametric_roots,
                        {"q-rv", "Theorem q-rv", "the following parametric generalization of (q-rv)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"2 poch(a q,q^2,k) poch(q/a,q^2,k) q^(2k) / (poch(q^2,q^2,k)^2 (1+q^(2k)))", "(n^r-1)/d"};
        c.prefactor = "kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.roots = RootSpec{"(2j+1)n", "0", "(n^(r-1)-1)/d"};
    }
    struct MS {
        const char* id;
        int m, s;
    };
    for (MS ms : {MS{"q-rv-conj-3-1", 3, 1}, MS{"q-rv-conj-4-1", 4, 1}, MS{"q-rv-conj-6-1", 6, 1}}) {
        const std::string m = std::to_string(ms.m), s = std::to_string(ms.s), t = std::to_string(ms.m - ms.s);
        Case& c = b.add(ms.id, CaseKind::conjecture,
                        {"q-rv-conj", "Conjecture (q-rv-conj)", "n = +-1 (mod m). Then, for r>=2"});
        c.description = "(m,s)=(" + m + "," + s + ")";
        c.r_min = 2;
        c.constraints = {"odd", "n>1", "(n%" + m + "-1)(n%" + m + "-" + std::to_string(ms.m - 1) + ")==0"};
        c.lhs = {"2 poch(q^" + s + ",q^" + m + ",k) poch(q^" + t + ",q^" + m + ",k) q^(" + m + "k) / (poch(q^" + m +
                     ",q^" + m + ",k)^2 (1+q^(" + m + "k)))",
                 "n^r-1"};
        c.prefactor = "(-1)^lnr(-" + s + "," + m + ",n)";
        c.rhs.bound = "n^(r-1)-1";
        c.modulus = single({cyc_range("n^j", "1", "r")});
    }
}

void conjectures(Builder& b) {
    {
        Case& c = b.add("conj4.1", CaseKind::conjecture,
                        {"q-a3", "Conjecture 4.1", "partial q-analogue of (eq:a3)"});
        c.d_values = {1, 2};
        c.constraints = {"n%4==1", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(q,q^2,k)^4 poch(q^2,q^4,k) / (poch(q^2,q^2,k)^4 poch(q^4,q^4,k)) q^k",
                 "(n^r-1)/d"};
        c.prefactor = "poch(q^2,q^4,(n^r-1)/4)^2 poch(q^(4n),q^(4n),(n^(r-1)-1)/4)^2 / "
                      "(poch(q^4,q^4,(n^r-1)/4)^2 poch(q^(2n),q^(4n),(n^(r-1)-1)/4)^2) qint(n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("conj4.2", CaseKind::conjecture,
                        {"q-c3", "Conjecture 4.2", "complete q-analogues of (eq:b3-new-1) and (eq:b3-new-2)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(q^2,q^4,k)^3 / poch(q^4,q^4,k)^3 q^k", "(n^r-1)/d"};
        c.prefactor = "qint(n,2) poch(-q^3,q^4,(n^r-1)/2) poch(-q^(5n),q^(4n),(n^(r-1)-1)/2) / "
                      "(poch(-q^5,q^4,(n^r-1)/2) poch(-q^(3n),q^(4n),(n^(r-1)-1)/2)) (-q)^((1-n)/2)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = standard_modulus();
    }
    {
        Case& c = b.add("conj4.3", CaseKind::conjecture,
                        {"q-a3", "Conjecture 4.3", "partial q-analogue of Swisher's (H.3)"});
        c.d_values = {1, 2};
        c.constraints = {"n%4==1", "n>1"};
        c.lhs = {"(1+q^(4k+1)) poch(q^2,q^4,k)^3 / ((1+q) poch(q^4,q^4,k)^3) q^k", "(n^r-1)/d"};
        c.prefactor = "qint(n,2) poch(q^3,q^4,(n^r-1)/2) poch(q^(5n),q^(4n),(n^(r-1)-1)/2) / "
                      "(poch(q^5,q^4,(n^r-1)/2) poch(q^(3n),q^(4n),(n^(r-1)-1)/2)) q^((1-n)/2)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_range("n^j", "1", "r")});
    }
    auto partial_modulus = [] {
        return single({qint_term("n^r"), cyc_term("n^r"), cyc_range("n^j", "1", "r", "1", "1")});
    };
    {
        Case& c = b.add("conj4.4", CaseKind::conjecture,
                        {"eq:div-2-2", "Conjecture 4.4", "partial q-analogues of (eq:last-1) and (eq:last-2)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(3k+1) poch(q,q^2,k)^3 / poch(q,q,k)^3", "(n^r-1)/d"};
        c.prefactor = "q^(((n^r-1)^2-n(n^(r-1)-1)^2)/4) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = partial_modulus();
    }
    {
        Case& c = b.add("conj4.5", CaseKind::conjecture,
                        {"conj:5", "Conjecture 4.5", "partial q-analogues of (eq:b3-new-1) and (eq:b3-new-2)"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"(-1)^k qint(4k+1) poch(q,q^2,k)^3 / poch(q^2,q^2,k)^3 q^(k^2)", "(n^r-1)/d"};
        c.prefactor = "q^(((n^r-1)^2-n(n^(r-1)-1)^2)/4) qint(n) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = partial_modulus();
    }
    {
        Case& c = b.add("conj4.6", CaseKind::conjecture,
                        {"conj:6", "Conjecture 4.6", "a q-analogue of (eq:rv-1) modulo p^{r+1}"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"poch(q,q^2,k)^2 / poch(q^2,q^2,k)^2", "(n^r-1)/d"};
        c.prefactor = "q^((1-n)(1+n^(2r-1))/4) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_term("n^r"), cyc_range("n^j", "1", "r", "1", "1")});
    }
    {
        Case& c = b.add("conj4.7a", CaseKind::conjecture,
                        {"conj:7", "Conjecture 4.7", "q-Dwork-type generalizations of them"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"q^k / poch(-q,q,k) qbinom(2k,k)", "(n^r-1)/d"};
        c.prefactor = "q^((n-1)(1+n^(2r-1))/4) kron(-1,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_term("n^r", "1", "2-d"), cyc_range("n^j", "1", "r", "1", "1")});
    }
    // The exponent (n-1)(1+n^(2r-1))/3 is fractional exactly when 3 | n, where
    // the Kronecker factor vanishes; floor() keeps the expression total.
    {
        Case& c = b.add("conj4.7b", CaseKind::conjecture,
                        {"conj:7", "Conjecture 4.7", "q-Dwork-type generalizations of them"});
        c.d_values = {1, 2};
        c.constraints = {"odd", "n>1"};
        c.lhs = {"q^k qbinom(2k,k)", "(n^r-1)/d"};
        c.prefactor = "q^floor((n-1)(1+n^(2r-1)),3) kron(-3,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_term("n^r", "1", "2-d"), cyc_range("n^j", "1", "r", "1", "1")});
    }
    {
        Case& c = b.add("conj4.7b-even", CaseKind::conjecture,
                        {"conj:7", "Conjecture 4.7", "When d=1, the second q-congruence still holds for even integers n"});
        c.d_values = {1};
        c.constraints = {"even", "n>1"};
        c.lhs = {"q^k qbinom(2k,k)", "(n^r-1)/d"};
        c.prefactor = "q^floor((n-1)(1+n^(2r-1)),3) kron(-3,n)";
        c.rhs.bound = "(n^(r-1)-1)/d";
        c.modulus = single({cyc_term("n^r", "1", "2-d"), cyc_range("n^j", "1", "r", "1", "1")});
    }
}

void classical_cases(Builder& b) {
    auto add = [&](const char* id, CaseKind kind, Anchor anchor, const char* summand, const char* lb, const char* rb,
                   const char* prefactor, const char* target) -> Case& {
        Case& c = b.classical(id, kind, std::move(anchor));
        c.lhs = {summand, lb};
        c.rhs.bound = rb;
        c.prefactor = prefactor;
        c.target = target;
        return c;
    };
    const char* ram = "(8k+1) binom(4k,2k) binom(2k,k)^2 / (2^(8k) 3^(2k))";
    {
        Case& c = add("classical-1.4", CaseKind::classical_padic,
                      {"ram1a-r", "(1.4)", "valid for any prime p>3 and r>=1"}, ram, "(p^r-1)/2", "(p^(r-1)-1)/2",
                      "p kron(-3,p)", "3r");
        c.description = "rhs truncation (p^(r-1)-1)/2 as in the q-analogue; the printed bound p^(r-1)-1 fails at r=2";
        c.constraints = {"p>3"};
        c.q_analogue = "thm1.1a";
    }
    {
        Case& c = add("classical-1.5", CaseKind::classical_padic,
                      {"ram1b-r", "(1.5)", "valid for any prime p>3 and r>=1"}, ram, "p^r-1", "p^(r-1)-1",
                      "p kron(-3,p)", "3r");
        c.description = "rhs truncation p^(r-1)-1 as in the q-analogue; the printed (p^(r-1)-1)/2 fails at r=2";
        c.constraints = {"p>3"};
        c.q_analogue = "thm1.1b";
    }
    const char* s16 = "rf(1/2,k)^3 / fact(k)^3 (3k+1) 2^(2k)";
    {
        Case& c = add("classical-1.6", CaseKind::classical_padic,
                      {"3k+1-a", "(1.6)", "expectedly valid for any prime p>2 and r>=1"}, s16, "(p^r-1)/2",
                      "(p^(r-1)-1)/2", "p", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "thm1.2a";
    }
    {
        Case& c = add("classical-1.7", CaseKind::classical_padic,
                      {"3k+1-b", "(1.7)", "expectedly valid for any prime p>2 and r>=1"}, s16, "p^r-1", "p^(r-1)-1",
                      "p", "3r");
        c.constraints = {"p>2"};
        c.conjectured_target = "4r-delta(p,3)";
        c.q_analogue = "thm1.2b";
    }
    {
        Case& c = add("classical-div-1", CaseKind::classical_padic,
                      {"eq:div-1", "(1.6)/(1.7) at r=1", "merge into the single entry"}, s16, "(p-1)/2", "0", "p",
                      "3");
        c.constraints = {"p>2"};
        c.r_max = 1;
    }
    const char* s_div3 = "rf(1/2,k)^3 / fact(k)^3 (3k+1) (-1)^k 2^(3k)";
    {
        Case& c = add("classical-div-3", CaseKind::classical_padic,
                      {"eq:div-3", "Section 3.2", "divergent Ramanujan-type supercongruence"}, s_div3, "(p-1)/2", "0",
                      "p kron(-1,p)", "3");
        c.constraints = {"p>2"};
        c.r_max = 1;
    }
    {
        Case& c = add("classical-last-1", CaseKind::classical_padic,
                      {"eq:last-1", "Section 3.2", "q-generalization of the above two supercongruences modulo p^{3r}"},
                      s_div3, "(p^r-1)/2", "(p^(r-1)-1)/2", "p kron(-1,p)", "3r");
        c.constraints = {"p>2"};
        c.conjectured_target = "3r+delta(p,3)";
        c.q_analogue = "main-3";
    }
    {
        Case& c = add("classical-last-2", CaseKind::classical_padic,
                      {"eq:last-2", "Section 3.2", "q-generalization of the above two supercongruences modulo p^{3r}"},
                      s_div3, "p^r-1", "p^(r-1)-1", "p kron(-1,p)", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "main-3";
    }
    const char* s_b3 = "(-1)^k (4k+1) rf(1/2,k)^3 / fact(k)^3";
    {
        Case& c = add("classical-b3-new-1", CaseKind::classical_padic,
                      {"eq:b3-new-1", "Section 3.3", "more generally, for any prime p>2"}, s_b3, "(p^r-1)/2",
                      "(p^(r-1)-1)/2", "p kron(-1,p)", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "main-4";
    }
    {
        Case& c = add("classical-b3-new-2", CaseKind::classical_padic,
                      {"eq:b3-new-2", "Section 3.3", "companion supercongruence"}, s_b3, "p^r-1", "p^(r-1)-1",
                      "p kron(-1,p)", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "main-4";
    }
    const char* s_l3 = "(-1)^k (6k+1) rf(1/2,k)^3 / (fact(k)^3 8^k)";
    {
        Case& c = add("classical-L3-1", CaseKind::classical_padic,
                      {"L3-1", "Section 3.3", "Swisher conjectured that, for r>=1"}, s_l3, "(p^r-1)/2",
                      "(p^(r-1)-1)/2", "p kron(-2,p)", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "main-5";
    }
    {
        Case& c = add("classical-L3-2", CaseKind::classical_padic,
                      {"L3-2", "Section 3.3", "made the following similar conjecture"}, s_l3, "p^r-1", "p^(r-1)-1",
                      "p kron(-2,p)", "3r");
        c.constraints = {"p>2"};
        c.q_analogue = "main-5";
    }
    {
        Case& c = add("classical-e3", CaseKind::classical_padic,
                      {"e3", "Section 3.4", "for p = 1 (mod 3)"}, "(6k+1) rf(1/3,k)^3 / (fact(k)^3 (-1)^k)",
                      "(p^r-1)/3", "(p^(r-1)-1)/3", "p", "3r");
        c.constraints = {"p%3==1"};
        c.q_analogue = "main-e";
    }
    {
        Case& c = add("classical-e3-minus", CaseKind::classical_padic,
                      {"q-e3", "Section 3.4", "letting n=p and q -> -1 in (q-e3)"},
                      "(6k+1) rf(1/3,k)^3 rf(1/2,k) / (fact(k)^3 rf(5/6,k))", "(p^r-1)/d", "(p^(r-1)-1)/d", "p",
                      "3r");
        c.d_values = {1, 3};
        c.constraints = {"p%3==1"};
    }
    {
        Case& c = add("classical-e-even", CaseKind::classical_padic,
                      {"e-even", "Section 3.4", "for r>=2 even"}, "(6k+1) rf(1/3,k)^3 / (fact(k)^3 (-1)^k)",
                      "(p^r-1)/3", "(p^(r-2)-1)/3", "p^2", "2r");
        c.constraints = {"p%3==1", "r%2==0"};
        c.r_min = 2;
    }
    {
        Case& c = add("classical-f3", CaseKind::classical_padic,
                      {"f3", "Section 3.4", "for p = 1 (mod 4)"}, "(8k+1) rf(1/4,k)^3 / (fact(k)^3 (-1)^k)",
                      "(p^r-1)/4", "(p^(r-1)-1)/4", "p kron(-2,p)", "3r");
        c.constraints = {"p%4==1"};
        c.q_analogue = "main-f";
    }
    {
        Case& c = add("classical-guo-3", CaseKind::classical_padic,
                      {"eq:guo-3", "Section 3.5", "Here we confirm this supercongruence"},
                      "(-1)^k (4k+1)^3 rf(1/2,k)^3 / fact(k)^3", "(p^r-1)/d", "(p^(r-1)-1)/d", "p kron(-1,p)",
                      "3r-2");
        c.d_values = {1, 2};
        c.constraints = {"p>2"};
        c.q_analogue = "new-1-1";
    }
    {
        Case& c = add("classical-guo-4", CaseKind::classical_padic,
                      {"eq:guo-4", "Section 3.5", "Here we prove that (eq:guo-4) is true modulo p^{3r-2}"},
                      "(4k+1)^3 rf(1/2,k)^4 / fact(k)^4", "(p^r-1)/d", "(p^(r-1)-1)/d", "p", "3r-2");
        c.d_values = {1, 2};
        c.constraints = {"p>2"};
        c.conjectured_target = "4r-3";
        c.q_analogue = "new-2-1";
    }
    {
        Case& c = add("classical-c3", CaseKind::classical_padic,
                      {"new-2-1", "Section 3.5", "we obtain the modulus p^{3r} case of (C.3)"},
                      "(4k+1) rf(1/2,k)^4 / fact(k)^4", "(p^r-1)/2", "(p^(r-1)-1)/2", "p", "3r");
        c.constraints = {"p>2"};
    }
    // The printed form drops the (-1)^k that survives q -> 1 in eq:lem-4k-2;
    // without it the r=2 instances fail.
    const char* s_4k = "(-1)^k (4k-1)^3 rf(-1/2,k)^3 / fact(k)^3";
    {
        Case& c = add("classical-4k-1-1", CaseKind::classical_padic,
                      {"4k-1-1", "Section 3.6", "also possess the following Dwork-type generalizations"}, s_4k,
                      "(p^r+1)/2", "(p^(r-1)+1)/2", "p kron(-1,p)", "3r-2");
        c.description = "with the (-1)^k of the q -> 1 limit of eq:lem-4k-2";
        c.constraints = {"p>2"};
        c.q_analogue = "lem-4k-2a";
    }
    {
        Case& c = add("classical-4k-1-2", CaseKind::classical_padic,
                      {"4k-1-2", "Section 3.6", "also possess the following Dwork-type generalizations"}, s_4k,
                      "p^r-1", "p^(r-1)-1", "p kron(-1,p)", "3r-2");
        c.description = "with the (-1)^k of the q -> 1 limit of eq:lem-4k-2";
        c.constraints = {"p>2"};
        c.q_analogue = "lem-4k-2b";
    }
    struct RV {
        const char* id;
        const char* label;
        const char* summand;
        const char* kron;
        const char* constraint;
    };
    const RV rvs[] = {
        {"classical-RV1", "eq:RV1", "binom(2k,k)^2 / 16^k", "kron(-1,p)", "p>2"},
        {"classical-RV2", "eq:RV2", "binom(3k,2k) binom(2k,k) / 27^k", "kron(-3,p)", "p>3"},
        {"classical-RV3", "eq:RV3", "binom(4k,2k) binom(2k,k) / 64^k", "kron(-2,p)", "p>2"},
        {"classical-RV4", "eq:RV4", "binom(6k,3k) binom(3k,k) / 432^k", "kron(-1,p)", "p>3"},
    };
    for (const auto& rv : rvs) {
        Case& c = add(rv.id, CaseKind::classical_padic,
                      {rv.label, "Section 3.7", "Mortenson proved the following four supercongruences"}, rv.summand,
                      "p-1", "0", rv.kron, "2");
        c.constraints = {rv.constraint};
        c.r_max = 1;
    }
    {
        Case& c = add("classical-rv-1", CaseKind::classical_padic,
                      {"eq:rv-1", "Section 3.7", "This confirms, for the first time, predictions"},
                      "binom(2k,k)^2 / 16^k", "(p^r-1)/d", "(p^(r-1)-1)/d", "kron(-1,p)", "2r");
        c.d_values = {1, 2};
        c.constraints = {"p>2"};
        c.q_analogue = "q-rv";
    }
    for (int i = 1; i < 4; ++i) {
        const RV& rv = rvs[i];
        const std::string id = std::string("classical-rv") + std::to_string(i + 1) + "-dwork";
        Case& c = b.classical(id.c_str(), CaseKind::conjecture,
                              {rv.label, "Section 3.7", "Numerical calculation suggests that (eq:RV2)--(eq:RV4) have similar generalization"});
        c.lhs = {rv.summand, "p^r-1"};
        c.rhs.bound = "p^(r-1)-1";
        c.prefactor = rv.kron;
        c.target = "2r";
        c.constraints = {rv.constraint};
    }
    {
        Case& c = b.classical("classical-sun-1", CaseKind::conjecture,
                              {"Su19-3i", "Section 4.1", "Sun conjectures that"});
        c.lhs = {"binom(2k,k) / 2^k", "p^r-1"};
        c.rhs.bound = "p^(r-1)-1";
        c.prefactor = "kron(-1,p)";
        c.target = "2r";
        c.constraints = {"p>2"};
    }
    {
        Case& c = b.classical("classical-sun-2", CaseKind::conjecture,
                              {"Su19-3i", "Section 4.1", "Sun conjectures that"});
        c.lhs = {"binom(2k,k)", "p^r-1"};
        c.rhs.bound = "p^(r-1)-1";
        c.prefactor = "kron(-3,p)";
        c.target = "2r";
        c.constraints = {"p>2"};
    }
}

std::vector<Case> build() {
    Builder b;
    q_theorems(b);
    section3(b);
    section3_cubes(b);
    rv_family(b);
    conjectures(b);
    classical_cases(b);
    return std::move(b.out);
}

}  // namespace

const std::vector<Case>& builtin_cases() {
    static const std::vector<Case> cases = build();
    return cases;
}

}  // namespace qcong
