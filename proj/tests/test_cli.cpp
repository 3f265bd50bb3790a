#include "cymirror/cli.hpp"
#include "cymirror/errors.hpp"
#include "cymirror/report.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace cymirror;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, EulerBoth) {
  const auto r = call({"euler", "1,2,3,4,5", "--method", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["double_sum"], "-126");
  EXPECT_EQ(j["subset"], "-126");
  EXPECT_EQ(j["subset_partials"], nlohmann::json({"225", "-585/4", "3375/8", "-19125/8"}));
  const auto d = parse(call({"euler", "1,1,1,1,1", "--method", "double-sum"}));
  EXPECT_EQ(d["double_sum"], "-200");
  EXPECT_FALSE(d.contains("subset"));
}

TEST(Cli, EulerErrors) {
  EXPECT_EQ(call({"euler", "0,1,2"}).code, 2);
  EXPECT_EQ(call({"euler", "1,2"}).code, 2);
  EXPECT_EQ(call({"euler", "1,2,3", "--method", "triple"}).code, 2);
  EXPECT_EQ(call({"euler", "2,2,3", "--method", "subset"}).code, 3);
  EXPECT_EQ(call({"euler", "2,2,3", "--method", "double-sum"}).code, 0);
  EXPECT_FALSE(call({"euler", "0,1,2"}).err.empty());
}

TEST(Cli, Stringy) {
  const auto j = parse(call({"stringy", "1,1,2,4,5"}));
  EXPECT_EQ(j["closed_form"], "1032/5");
  EXPECT_EQ(j["polytope"], "1032/5");
  EXPECT_EQ(call({"stringy", "1,1,4"}).code, 3);
  const auto d = parse(call({"stringy", "1,1,1", "--method", "closed-form", "--dump-polytope"}));
  EXPECT_EQ(d["closed_form"], "0");
  EXPECT_FALSE(d.contains("polytope"));
  EXPECT_EQ(d["mirror_simplex"].size(), 3u);
}

TEST(Cli, Mirror) {
  EXPECT_EQ(call({"mirror", "1,1,6,14,21", "--format", "text"}).out, "1/(t1*t2^6*t3^14*t4^21) + t1 + t2 + t3 + t4\n");
  EXPECT_EQ(call({"mirror", "1,1,6,14,21"}).out, "1/(t1*t2^6*t3^14*t4^21) + t1 + t2 + t3 + t4\n");
  EXPECT_EQ(parse(call({"mirror", "1,1,1", "--format", "json"})).size(), 3u);
  EXPECT_EQ(call({"mirror", "2,2,3"}).code, 3);
}

TEST(Cli, Check) {
  const auto j = parse(call({"check", "1,2,3,4,5"}));
  EXPECT_EQ(j["well_formed"], true);
  EXPECT_EQ(j["gorenstein"], false);
  EXPECT_EQ(j["ip"], true);
  EXPECT_EQ(j["transverse"], true);
}

TEST(Cli, Verify) {
  const auto a = call({"verify", "1,2,3,4,5"});
  ASSERT_EQ(a.code, 0);
  const auto j = parse(a);
  EXPECT_EQ(j["chi_orb_formula"], "-126");
  EXPECT_EQ(j["chi_str_mirror"], "126");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  const std::vector<std::string> expected{"chi_orb_formula", "chi_str_mirror", "degree",     "gorenstein",
                                          "integral",        "ip",             "methods_agree", "notes",
                                          "transverse",      "weights",        "well_formed"};
  EXPECT_EQ(keys, expected);

  const auto b = parse(call({"verify", "1,1,2,4,5"}));
  EXPECT_EQ(b["chi_str_mirror"], "1032/5");
  EXPECT_EQ(b["integral"], false);
  EXPECT_NE(call({"verify", "1,1,2,4,5"}).out.find("\"1032/5\""), std::string::npos);

  const auto c = call({"verify", "1,1,6,14,21"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(parse(c)["transverse"], false);
  EXPECT_TRUE(parse(call({"verify", "2,3,3,5"}))["chi_str_mirror"].is_null());
}

TEST(Cli, ReportRoundTrip) {
  for (const char* w : {"1,2,3,4,5", "1,1,6,14,21", "1,1,2,4,5", "2,3,3,5", "2,2,3"}) {
    const auto r = call({"verify", w});
    const std::string json = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(to_json(report_from_json(json)), json) << w;
  }
  EXPECT_THROW(report_from_json("{}"), ParseError);
  EXPECT_THROW(report_from_json("not json"), ParseError);
}

TEST(Cli, CensusToStdoutAndFile) {
  const auto r = call({"census", "--dim", "2", "--max-degree", "60", "--filter", "transverse"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].rfind("# cymirror census dim=2 max_degree=60 filter=transverse", 0), 0u);
  EXPECT_EQ(out[1], "3\t1,1,1\t1\t1\t1\t0");
  EXPECT_EQ(out[2], "4\t1,1,2\t1\t1\t1\t0");
  EXPECT_EQ(out[3], "6\t1,2,3\t1\t1\t1\t0");

  const std::string path = ::testing::TempDir() + "cymirror_census.tsv";
  const auto f = call({"census", "--dim", "3", "--max-degree", "100", "--jobs", "3", "--out", path});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(lines(text.str()).size(), 96u);
  EXPECT_EQ(text.str(), call({"census", "--dim", "3", "--max-degree", "100", "--jobs", "1"}).out);
  std::remove(path.c_str());
}

TEST(Cli, CensusJobsFromEnvironment) {
  ::setenv("CYMIRROR_JOBS", "2", 1);
  EXPECT_EQ(call({"census", "--dim", "2"}).code, 0);
  ::setenv("CYMIRROR_JOBS", "many", 1);
  EXPECT_EQ(call({"census", "--dim", "2"}).code, 2);
  ::unsetenv("CYMIRROR_JOBS");
}

TEST(Cli, CensusErrors) {
  EXPECT_EQ(call({"census", "--dim", "5", "--max-degree", "10"}).code, 3);
  EXPECT_EQ(call({"census", "--filter", "odd"}).code, 2);
  EXPECT_EQ(call({"census", "--jobs", "0"}).code, 2);
  EXPECT_EQ(call({"census", "--dim", "2", "--out", "/nonexistent/dir/x.tsv"}).code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"verify"}).code, 2);
  const auto h = call({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("census"), std::string::npos);
  EXPECT_EQ(call({"--version"}).code, 0);
}
