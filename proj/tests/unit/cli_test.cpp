#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "report_io.hpp"

namespace cli = polybound::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::size_t start = 0;
  while (start < csv.size()) {
    const auto end = csv.find("\r\n", start);
    rows.push_back(csv.substr(start, end - start));
    start = end + 2;
  }
  return rows;
}

}  // namespace

TEST(Cli, ReportJsonSchema) {
  const auto r = run({"report", "90,-101,18", "--p", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["poly"], "90,-101,18");
  EXPECT_EQ(j["p"], 1.0);
  for (const char* key : {"lp", "sup", "mahler"}) EXPECT_TRUE(j["measured"].contains(key)) << key;
  EXPECT_GT(j["measured"]["lp"].get<double>(), 118.0);
  bool found = false;
  for (const auto& e : j["entries"]) {
    for (const char* key : {"name", "value", "applicable", "p_window", "ref"}) {
      EXPECT_TRUE(e.contains(key)) << key;
    }
    EXPECT_EQ(e["applicable"].get<bool>(), !e["value"].is_null());
    if (e["name"] == "thm1_asym") {
      found = true;
      EXPECT_NEAR(e["value"].get<double>(), 90.9, 1e-9);
      EXPECT_EQ(e["p_window"][1], "inf");
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["best"], "easy_l1");
  EXPECT_FALSE(j["footnotes"].empty());
}

TEST(Cli, ReportTextAndJsonInput) {
  const auto t = run({"report", "[[90,0],[-101,0],[18,0]]", "--p", "1", "--format", "text"});
  ASSERT_EQ(t.code, cli::kExitOk) << t.err;
  EXPECT_NE(t.out.find("thm1_asym"), std::string::npos);
  EXPECT_NE(t.out.find("<- best"), std::string::npos);
  const auto inf = run({"report", "1,1", "--p", "inf"});
  ASSERT_EQ(inf.code, cli::kExitOk) << inf.err;
  EXPECT_EQ(json::parse(inf.out)["p"], "inf");
}

TEST(Cli, InputErrorsExitTwoWithPosition) {
  auto r = run({"report", "1,2x", "--p", "1"});
  EXPECT_EQ(r.code, cli::kExitInputError);
  EXPECT_NE(r.err.find("position"), std::string::npos) << r.err;
  r = run({"report", "[1, 2", "--p", "1"});
  EXPECT_EQ(r.code, cli::kExitInputError);
  EXPECT_NE(r.err.find("position"), std::string::npos) << r.err;
  EXPECT_EQ(run({"report", "0,0", "--p", "1"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"report", "1,1", "--p", "-3"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"report", "1,1", "--format", "xml"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitInputError);
  EXPECT_EQ(run({}).code, cli::kExitInputError);
  EXPECT_EQ(run({"witness", "--p", "2.5"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"subsets", "0,1,1", "--p", "1"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"verify", "--count", "0"}).code, cli::kExitInputError);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("report"), std::string::npos);
}

TEST(Cli, Constants) {
  const auto r = run({"constants"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("0.636619772367581"), std::string::npos);
  EXPECT_NE(r.out.find("1.1576382"), std::string::npos);
  EXPECT_NE(r.out.find("1.9802913"), std::string::npos);
  EXPECT_NE(r.out.find("3.6368277"), std::string::npos);
  const json j = json::parse(run({"constants", "--format", "json"}).out);
  EXPECT_NEAR(j["crossover_threshold"].get<double>(), 1.1576382146211033, 1e-12);
  EXPECT_EQ(j["bp_constant"][5]["B_p"], 1.0);
}

TEST(Cli, SubsetsCsv) {
  const auto r = run({"subsets", "90,-101,18", "--p", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = split_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "mask,b0_abs,bN_abs,r,sym,asym_proven,asym_remark");
  EXPECT_EQ(rows[4].substr(0, 7), "\"{1,2}\"");
  EXPECT_NE(rows[3].find("102.0125"), std::string::npos);
  EXPECT_NE(rows[3].find("82.2345679"), std::string::npos);
}

TEST(Cli, CsvQuoting) {
  using polybound::io::csv_field;
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(polybound::io::csv_row({"1", "x,y"}), "1,\"x,y\"\r\n");
}

TEST(Cli, VerifyDeterministicAndClean) {
  const std::vector<std::string> args{"verify", "--count", "40", "--seed", "9", "--p-grid", "1,1.5,2",
                                      "--mode", "mixed", "--include-unproven"};
  const auto a = run(args);
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(run(threaded).out, a.out);
  const json j = json::parse(a.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["instances"], 40);
}

TEST(Cli, ViolationExitCode) {
  // A negative tolerance turns every exact equality into a reported
  // violation, which exercises the exit-code path.
  const auto r = run({"verify", "--count", "3", "--mode", "cyclotomic", "--tol", "-1e-3"});
  EXPECT_EQ(r.code, cli::kExitViolation);
  EXPECT_FALSE(json::parse(r.out)["violations"].empty());
}

TEST(Cli, WitnessAndSharpness) {
  const auto w = run({"witness", "--p", "1.5"});
  ASSERT_EQ(w.code, cli::kExitOk) << w.err;
  const json j = json::parse(w.out);
  EXPECT_EQ(j["pair_sym_exceeds_hausdorff_young"]["poly"], "1,1");
  EXPECT_EQ(j["hausdorff_young_exceeds_pair_sym"]["poly"], "1,1,1,1");
  const auto s = run({"sharpness", "--count", "10", "--mode", "cyclotomic"});
  ASSERT_EQ(s.code, cli::kExitOk) << s.err;
  EXPECT_EQ(split_rows(s.out).at(0), "bound,p,count,min,median,max");
  EXPECT_EQ(run({"sharpness", "--count", "10", "--mode", "cyclotomic"}).out, s.out);
}
