#include "doctest.h"

#include <sstream>

#include "posg/cli.hpp"

using namespace posg;
using posg::cli::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum command") {
  SUBCASE("json output with oracle cross-check") {
    const auto res = run_cli({"spectrum", "--family", "symmetric", "--n", "4",
                              "--method", "both", "--format", "json"});
    REQUIRE(res.code == cli::kExitOk);
    const auto j = Json::parse(res.out);
    CHECK(j["family"] == "symmetric");
    CHECK(j["params"]["n"] == 4);
    CHECK(j["order"] == "24");
    CHECK(j["pos"] == false);
    bool found = false;
    for (const auto& row : j["spectrum"])
      if (row["order"] == "2" && row["count"] == "9") found = true;
    CHECK(found);
  }
  SUBCASE("trivial group") {
    const auto res =
        run_cli({"spectrum", "--family", "cyclic", "--m", "1", "--format",
                 "json"});
    REQUIRE(res.code == cli::kExitOk);
    const auto j = Json::parse(res.out);
    CHECK(j["spectrum"] == Json::parse(R"([{"order":"1","count":"1"}])"));
  }
  SUBCASE("csv rows are byte-stable") {
    const auto res = run_cli({"spectrum", "--family", "dihedral", "--n", "9",
                              "--format", "csv"});
    REQUIRE(res.code == cli::kExitOk);
    CHECK(res.out ==
          "family,n,order,count\n"
          "dihedral,9,1,1\n"
          "dihedral,9,2,9\n"
          "dihedral,9,3,2\n"
          "dihedral,9,9,6\n");
  }
  SUBCASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args = {"spectrum", "--family", "symmetric",
                                           "--n", "6", "--format", "json"};
    CHECK(run_cli(args).out == run_cli(args).out);
  }
  SUBCASE("bad arguments exit 2") {
    CHECK(run_cli({"spectrum", "--family", "symmetric"}).code ==
          cli::kExitBadArguments);
    CHECK(run_cli({"spectrum", "--family", "nosuch", "--n", "3"}).code ==
          cli::kExitBadArguments);
    CHECK(run_cli({"spectrum", "--family", "quaternion", "--n", "2"}).code ==
          cli::kExitBadArguments);
  }
  SUBCASE("budget refusal exits 3") {
    CHECK(run_cli({"spectrum", "--family", "symmetric", "--n", "11",
                   "--method", "brute"})
              .code == cli::kExitBudgetRefusal);
  }
}

TEST_CASE("check command") {
  CHECK(run_cli({"check", "--family", "dihedral", "--n", "27", "--expect",
                 "pos"})
            .code == cli::kExitOk);
  CHECK(run_cli({"check", "--family", "symmetric", "--n", "4", "--expect",
                 "pos"})
            .code == cli::kExitClaimMismatch);

  SUBCASE("S_5 verdict carries the (2, 25) violation") {
    const auto res =
        run_cli({"check", "--family", "symmetric", "--n", "5", "--format",
                 "json"});
    REQUIRE(res.code == cli::kExitOk);
    const auto j = Json::parse(res.out);
    CHECK(j["pos"] == false);
    CHECK(j["violations"] ==
          Json::parse(R"([{"order":"2","count":"25"}])"));
    CHECK(!j.contains("spectrum"));
  }
  SUBCASE("Q_3 violation (4, 6)") {
    const auto res = run_cli(
        {"check", "--family", "quaternion", "--n", "3", "--format", "json"});
    const auto j = Json::parse(res.out);
    CHECK(j["violations"] == Json::parse(R"([{"order":"4","count":"6"}])"));
  }
  SUBCASE("cross-check flag works end to end") {
    CHECK(run_cli({"check", "--family", "symmetric", "--n", "6",
                   "--cross-check"})
              .code == cli::kExitOk);
  }
}

TEST_CASE("json round-trip equals the in-memory record") {
  const auto spec = GroupSpec::symmetric(5);
  cli::OutputRecord rec = cli::OutputRecord::for_spec(spec);
  rec.spectrum = spectrum_closed_form(spec);
  rec.verdict = check_pos(spec);
  const Json j = cli::record_to_json(rec);
  const std::string dumped = j.dump(2);
  const Json reparsed = Json::parse(dumped);
  CHECK(reparsed == j);
  CHECK(reparsed.dump(2) == dumped);
  // and the fields survive
  CHECK(reparsed["order"].get<std::string>() == to_decimal(rec.order));
  CHECK(reparsed["spectrum"].size() == rec.spectrum->entries.size());
}

TEST_CASE("verify command") {
  SUBCASE("lemma3.3 at p=3 prints the contradiction fraction") {
    const auto res = run_cli({"verify", "lemma3.3", "--p", "3"});
    REQUIRE(res.code == cli::kExitOk);
    CHECK(res.out.find("C=3840/7060") != std::string::npos);
    CHECK(res.out.find("non-integral") != std::string::npos);
  }
  SUBCASE("the (3,0) anomaly is reported but not a failure") {
    const auto res = run_cli({"verify", "lemma3.1", "--p", "3", "--r", "0"});
    REQUIRE(res.code == cli::kExitOk);
    CHECK(res.out.find("KNOWN-ANOMALY") != std::string::npos);
    CHECK(res.out.find("0 failures, 1 known anomalies") != std::string::npos);
  }
  SUBCASE("full p sweep stays green") {
    CHECK(run_cli({"verify", "lemma3.1", "--p-max", "13"}).code ==
          cli::kExitOk);
    CHECK(run_cli({"verify", "lemma3.2", "--p-max", "13"}).code ==
          cli::kExitOk);
    CHECK(run_cli({"verify", "lemma3.3", "--p-max", "31"}).code ==
          cli::kExitOk);
  }
  SUBCASE("range targets") {
    CHECK(run_cli({"verify", "coverage", "--n-max", "1000"}).code ==
          cli::kExitOk);
    CHECK(run_cli({"verify", "wilson", "--p-max", "300"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "thm2.1", "--n-max", "100"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "thm3.1", "--n-max", "30"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "prop2.1", "--alpha", "2", "--t", "2"}).code ==
          cli::kExitOk);
    CHECK(run_cli({"verify", "prop2.2", "--n-max", "6"}).code == cli::kExitOk);
  }
  SUBCASE("json stream parses line by line") {
    const auto res = run_cli({"verify", "lemma3.3", "--p", "3", "--format",
                              "json"});
    REQUIRE(res.code == cli::kExitOk);
    std::istringstream lines(res.out);
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto j = Json::parse(line, nullptr, /*allow_exceptions=*/false);
      CHECK_FALSE(j.is_discarded());
      ++parsed;
    }
    CHECK(parsed == 2);  // one case + summary
  }
  SUBCASE("unknown target exits 2") {
    CHECK(run_cli({"verify", "lemma9.9"}).code == cli::kExitBadArguments);
  }
}

TEST_CASE("scan command") {
  SUBCASE("dihedral scan marks exactly the powers of three") {
    const auto res =
        run_cli({"scan", "--family", "dihedral", "--from", "2", "--to", "100"});
    REQUIRE(res.code == cli::kExitOk);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "family,n,order,pos,violations");
    std::vector<std::uint64_t> pos_at;
    std::uint64_t n = 2;
    while (std::getline(lines, line)) {
      if (line.find(",true,") != std::string::npos) pos_at.push_back(n);
      ++n;
    }
    CHECK(n == 101);
    CHECK(pos_at == std::vector<std::uint64_t>{3, 9, 27, 81});
  }
  SUBCASE("symmetric scan: POS only at n = 3") {
    const auto res = run_cli(
        {"scan", "--family", "symmetric", "--from", "3", "--to", "12"});
    REQUIRE(res.code == cli::kExitOk);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);  // header
    std::uint64_t n = 3;
    while (std::getline(lines, line)) {
      CHECK((line.find(",true,") != std::string::npos) == (n == 3));
      ++n;
    }
    CHECK(n == 13);
  }
  SUBCASE("quaternion scan is all non-POS") {
    const auto res = run_cli(
        {"scan", "--family", "quaternion", "--from", "3", "--to", "12"});
    REQUIRE(res.code == cli::kExitOk);
    CHECK(res.out.find(",true,") == std::string::npos);
  }
  SUBCASE("parallel scan output is byte-identical to sequential") {
    const auto seq = run_cli(
        {"scan", "--family", "dihedral", "--from", "2", "--to", "200"});
    const auto par = run_cli({"scan", "--family", "dihedral", "--from", "2",
                              "--to", "200", "--jobs", "4"});
    CHECK(seq.out == par.out);
  }
  SUBCASE("jsonl rows parse") {
    const auto res = run_cli({"scan", "--family", "cyclic", "--from", "1",
                              "--to", "5", "--format", "jsonl"});
    REQUIRE(res.code == cli::kExitOk);
    std::istringstream lines(res.out);
    std::string line;
    std::size_t rows = 0;
    // phi(3) = 2 and phi(5) = 4 do not divide 3 and 5
    const std::vector<bool> expected = {true, true, false, true, false};
    while (std::getline(lines, line)) {
      const auto j = Json::parse(line);
      REQUIRE(rows < expected.size());
      CHECK(j["pos"] == expected[rows]);
      ++rows;
    }
    CHECK(rows == 5);
  }
  SUBCASE("unwritable output path exits 4") {
    CHECK(run_cli({"scan", "--family", "cyclic", "--from", "1", "--to", "3",
                   "--out", "/nonexistent-dir/rows.csv"})
              .code == cli::kExitIoFailure);
  }
}

TEST_CASE("help exits 0") {
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}
