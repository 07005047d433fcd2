#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Proc {
    int status = -1;
    std::string out;
};

Proc qcong(const std::string& args) {
    const std::string cmd = std::string(QCONG_BIN) + " " + args + " 2>/dev/null";
    Proc r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / ("qcong-test-" + name); }

// A catalog holding a copy of a builtin case under a new id, with its
// prefactor sign flipped when `broken`.
std::string user_catalog(const std::string& from, const std::string& id, bool broken) {
    const auto all = tmp("all.json");
    EXPECT_EQ(qcong("export " + all.string()).status, 0);
    std::ifstream in(all);
    const json doc = json::parse(in);
    const json& cases = doc.is_object() ? doc.at("cases") : doc;
    json pick;
    for (const auto& c : cases)
        if (c.at("id") == from) pick = c;
    EXPECT_FALSE(pick.is_null());
    pick["id"] = id;
    if (broken) pick["prefactor"] = "-(" + pick.at("prefactor").get<std::string>() + ")";
    json out = doc;
    (doc.is_object() ? out["cases"] : out) = json::array({pick});
    const auto path = tmp(id + ".json");
    std::ofstream(path) << out.dump(1);
    return path.string();
}

}  // namespace

TEST(Cli, VerifyPasses) {
    const Proc r = qcong("verify --case thm1.1a --n 5 --r 1 --d 2 --report - --quiet --no-timing");
    EXPECT_EQ(r.status, 0);
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc.at("cases").size(), 1u);
    EXPECT_EQ(doc["cases"][0]["outcome"], "pass");
    EXPECT_EQ(doc["summary"]["pass"], 1);
}

TEST(Cli, VerifyClassical) { EXPECT_EQ(qcong("verify --case classical-1.4 --p 5 --r 2 --quiet").status, 0); }

TEST(Cli, UsageErrors) {
    EXPECT_EQ(qcong("verify --case thm1.1a --n 4").status, 64);
    EXPECT_EQ(qcong("verify --case no-such-case --n 5").status, 64);
    EXPECT_EQ(qcong("verify --case thm1.1a --n five").status, 64);
    EXPECT_EQ(qcong("frobnicate").status, 64);
}

TEST(Cli, ListFilters) {
    const Proc all = qcong("list");
    EXPECT_EQ(all.status, 0);
    for (const char* id : {"thm1.1a", "thm1.1b", "thm1.2a", "thm1.2b", "lem2.2", "main-4", "conj4.1", "conj4.7a"})
        EXPECT_NE(all.out.find(id), std::string::npos) << id;

    const Proc conj = qcong("list --kind conjecture");
    std::istringstream lines(conj.out);
    std::string line;
    std::getline(lines, line);   // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_NE(line.find("conjecture"), std::string::npos) << line;
    }
    EXPECT_GT(rows, 7);

    const Proc m5 = qcong("list --anchor \"Theorem main-5\"");
    EXPECT_NE(m5.out.find("main-5 "), std::string::npos);
    EXPECT_EQ(m5.out.find("thm1.1a"), std::string::npos);
}

TEST(Cli, ConjectureFailureExitsTwo) {
    const std::string cat = user_catalog("conj4.2", "my-conj", true);
    EXPECT_NE(qcong("list --catalog " + cat).out.find("my-conj"), std::string::npos);
    EXPECT_EQ(qcong("verify --catalog " + cat + " --case my-conj --n 5 --quiet").status, 2);
    EXPECT_EQ(qcong("verify --catalog " + cat + " --case my-conj --case thm1.1a --n 5 --quiet").status, 2);
    // a theorem failure wins
    const std::string bad = user_catalog("thm1.1a", "bad-thm-2", true);
    EXPECT_EQ(qcong("verify --catalog " + cat + " --catalog " + bad + " --case my-conj --case bad-thm-2 --n 5 --quiet").status, 1);
}

TEST(Cli, TheoremFailureAndEmitPoly) {
    const std::string cat = user_catalog("thm1.1a", "bad-thm", true);
    const Proc r = qcong("verify --catalog " + cat + " --case bad-thm --n 5 --d 1 --emit-poly --report - --quiet");
    EXPECT_EQ(r.status, 1);
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc.at("cases").size(), 1u);
    EXPECT_EQ(doc["cases"][0]["outcome"], "fail");
    ASSERT_TRUE(doc["cases"][0].contains("delta_numerators"));
    EXPECT_FALSE(doc["cases"][0]["delta_numerators"].empty());
}

TEST(Cli, JobsDoNotChangeTheReport) {
    const std::string args = " --cases thm1.1a,main-4,thm2.3,classical-1.4 --n 5,7 --p 5,7 --r 1 --report - --quiet --no-timing";
    json a = json::parse(qcong("sweep --jobs 1" + args).out);
    json b = json::parse(qcong("sweep --jobs 4" + args).out);
    // the command line, and so the run id, differ
    for (json* j : {&a, &b}) {
        (*j)["header"].erase("command");
        j->erase("run_id");
    }
    EXPECT_EQ(a, b);
    EXPECT_GT(a.at("cases").size(), 6u);
}

TEST(Cli, OracleCheck) {
    const Proc r = qcong("oracle-check --cases thm1.2a --n 9 --r 1 --d 1 --report - --quiet --no-timing");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["cases"][0]["outcome"], "pass");
}
