#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "qcong/catalog.hpp"

using namespace qcong;

TEST(Expr, ParsesJuxtapositionAndPowers) {
    IntEnv env{{"n", 5}, {"r", 2}, {"k", 3}};
    EXPECT_EQ(eval_int("(n^r-1)/2", env), 12);
    EXPECT_EQ(eval_int("2k^2", env), 18);
    EXPECT_EQ(eval_int("-binom(k+1,2)", env), -6);
    EXPECT_EQ(eval_int("ceil(n^(r-1)-1, 4)", env), 1);
    EXPECT_EQ(eval_int("lnr(-1,3,n)", env), 3);   // -1/3 = 3 mod 5
    EXPECT_THROW(eval_int("(n-2)/2", env), NonIntegral);
    EXPECT_THROW(parse_expr("n+"), ParseError);
}

TEST(Expr, ToStringReparses) {
    for (const char* s : {"qint(8k+1) poch(q,q^2,k)^2 / (poch(q^6,q^6,k)^2) q^(2k^2)", "(-1)^k 2^(3k)", "-q^(-n)"}) {
        auto e = parse_expr(s);
        EXPECT_EQ(parse_expr(e->to_string())->to_string(), e->to_string()) << s;
    }
}

TEST(Constraint, Shorthands) {
    EXPECT_TRUE(Constraint::parse("odd").holds({{"n", 7}}));
    EXPECT_FALSE(Constraint::parse("gcd(n,6)==1").holds({{"n", 9}}));
    EXPECT_TRUE(Constraint::parse("n%4==1").holds({{"n", 13}}));
}

TEST(Catalog, BuiltinsValidate) {
    const auto& cases = builtin_cases();
    EXPECT_GE(cases.size(), 40u);
    std::set<std::string> ids;
    for (const auto& c : cases) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_FALSE(c.anchor.label.empty()) << c.id;
        EXPECT_NO_THROW(validate_case(c)) << c.id;
    }
}

TEST(Catalog, Lookups) {
    const Case& a = lookup("thm1.1a");
    EXPECT_EQ(a.anchor.label, "q4a");
    EXPECT_NE(std::find(a.constraints.begin(), a.constraints.end(), "gcd(n,6)==1"), a.constraints.end());
    EXPECT_EQ(lookup("lem2.2").kind, CaseKind::q_identity);
    const Case& c = lookup("classical-1.4");
    EXPECT_EQ(c.domain, Domain::classical);
    EXPECT_EQ(c.target.text, "3r");
    EXPECT_THROW(lookup("nope"), CaseError);
}

TEST(Catalog, ConjecturesFlagged) {
    for (const char* id : {"conj4.1", "conj4.2", "conj4.3", "conj4.4", "conj4.5", "conj4.6", "conj4.7a", "conj4.7b"})
        EXPECT_TRUE(lookup(id).is_conjecture()) << id;
}

TEST(Catalog, Admissibility) {
    const Case& c = lookup("thm1.1a");
    EXPECT_TRUE(admissible(c, 5, 1, 1));
    EXPECT_FALSE(admissible(c, 9, 1, 1));
    const Case& m = lookup("main-4");
    EXPECT_FALSE(admissible(m, 5, 1, 3));
    EXPECT_THROW(require_admissible(m, 5, 1, std::nullopt), CaseError);
    EXPECT_FALSE(admissible(lookup("classical-1.6"), 9, 1, std::nullopt));
}

TEST(Catalog, ModulusExpansion) {
    const Case& c = lookup("thm1.1a");
    auto m = instantiate_modulus(c, instance_env(c, 5, 2, std::nullopt));
    EXPECT_EQ(m.exponent_of(5), 3);
    EXPECT_EQ(m.exponent_of(25), 3);
    const Case& n3 = lookup("new-1-1");
    auto f = modulus_factors(n3, instance_env(n3, 3, 2, 2));
    EXPECT_EQ(f.size(), 5u);
}

TEST(Catalog, SaveLoadRoundTrip) {
    const std::string path = ::testing::TempDir() + "qcong_cases.json";
    save_cases(path, builtin_cases());
    auto loaded = load_cases(path);
    EXPECT_EQ(loaded, builtin_cases());
    std::remove(path.c_str());
}

TEST(Catalog, BoundOutsideDomainRejected) {
    Case c = lookup("main-4");
    c.id = "user-bad";
    c.lhs.bound = "(n^r-1)/5";
    std::string text = cases_to_json({c});
    try {
        cases_from_json(text, "user.json");
        FAIL() << "expected a schema error";
    } catch (const CaseError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("user.json: cases[0]"), std::string::npos) << msg;
        EXPECT_NE(msg.find("d domain {1,2}"), std::string::npos) << msg;
    }
}

TEST(Catalog, SchemaErrorsCarryLocation) {
    EXPECT_THROW(cases_from_json("{\"schema_version\":1,\"cases\":[{\"id\":\"x\"}]}"), CaseError);
    try {
        cases_from_json("{\"schema_version\":1,\"cases\":[{\"id\":\"x\",\"kind\":\"q_identity\",\"anchor\":{\"label\":\"l\"},"
                        "\"lhs\":{\"summand\":\"q^k\",\"bound\":\"n-1\"},\"bogus\":1}]}",
                        "f.json");
        FAIL();
    } catch (const CaseError& e) {
        EXPECT_NE(std::string(e.what()).find("f.json: cases[0].bogus"), std::string::npos) << e.what();
    }
}

TEST(Catalog, UserCaseLoads) {
    Case c = lookup("conj4.6");
    c.id = "user-conj";
    auto loaded = cases_from_json(cases_to_json({c}));
    ASSERT_EQ(loaded.size(), 1u);
    EXPECT_EQ(loaded[0].id, "user-conj");
    EXPECT_TRUE(loaded[0].is_conjecture());
}

TEST(Catalog, SmallestInstanceExists) {
    for (const auto& c : builtin_cases()) {
        auto inst = smallest_instance(c);
        ASSERT_TRUE(inst.has_value()) << c.id;
        EXPECT_TRUE(admissible(c, inst->n, inst->r, inst->d)) << c.id;
    }
}
