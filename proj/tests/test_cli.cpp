#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "nestedquiver/cli.hpp"

namespace cli = nq::cli;
using nq::Json;

namespace {

const nq::NestedIdealPair kPair{nq::NuPoint(1, 0), fx::ideal({"y", "x^2"}), fx::ideal({"x", "y"})};

int run_args(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "nestedquiver");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("check reports residuals and stability") {
  auto r = cli::cmd_check(nq::to_json(fx::e3()), std::nullopt);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.report["stability"]["verdict"] == "stable");
  nq::EnhRep bad = fx::e3();
  bad.F1 = nq::Matrix(1, 2);
  r = cli::cmd_check(nq::to_json(bad), std::nullopt);
  CHECK(r.exit_code == cli::kVerificationFailed);
  r = cli::cmd_check(Json::parse(R"({"n": 1})"), std::nullopt);
  CHECK(r.exit_code == cli::kParseError);
  r = cli::cmd_check(nq::to_json(fx::e3()), nq::EnhThetaParam{1, nq::Rational(-3, 5), -1, -1});
  CHECK(r.exit_code == cli::kPrecondition);
}

TEST_CASE("convert both ways") {
  auto r = cli::cmd_convert("cycle-to-rep", nq::to_json(kPair), 1, std::nullopt);
  REQUIRE(r.exit_code == cli::kOk);
  const nq::EnhRep x = nq::enh_from_json(r.report);
  CHECK(nq::all_zero(nq::enh_residuals(x)));
  r = cli::cmd_convert("rep-to-cycle", nq::to_json(x), 1, std::nullopt);
  REQUIRE(r.exit_code == cli::kOk);
  CHECK(nq::pair_from_json(r.report) == kPair);
  nq::NestedIdealPair swapped = kPair;
  std::swap(swapped.big, swapped.small);
  CHECK(cli::cmd_convert("cycle-to-rep", nq::to_json(swapped), 1, std::nullopt).exit_code == cli::kVerificationFailed);
}

TEST_CASE("count-fixed and roundtrip") {
  auto r = cli::cmd_count_fixed(1, 2, 2, 1);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.report["count"] == 6);
  cli::RoundtripOptions o;
  o.cmax = 2;
  o.random = 5;
  o.seed = 7;
  r = cli::cmd_roundtrip(o);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.report["failed"] == 0);
}

TEST_CASE("same seed, same bytes") {
  std::string a, b, e;
  const std::vector<std::string> args{"--seed", "11", "roundtrip", "--cmax", "2", "--random", "6", "--n", "2"};
  CHECK(run_args(args, a, e) == 0);
  CHECK(run_args(args, b, e) == 0);
  CHECK(a == b);
  CHECK(Json::parse(a)["total"] == 19);
}

TEST_CASE("argument errors are parse errors") {
  std::string out, err;
  CHECK(run_args({"count-fixed", "--cp", "1"}, out, err) == cli::kParseError);
  CHECK(run_args({"no-such-command"}, out, err) == cli::kParseError);
  CHECK(run_args({"check", "/nonexistent/file.json"}, out, err) == cli::kParseError);
  CHECK(run_args({"count-fixed", "--cp", "2", "--c", "2"}, out, err) == cli::kPrecondition);
}

TEST_CASE("monad check") {
  auto r = cli::cmd_monad_check(nq::to_json(fx::e1()), std::nullopt);
  CHECK(r.exit_code == cli::kOk);
  r = cli::cmd_monad_check(nq::to_json(nq::HirzRep::zero(1, 2)), nq::NuPoint(1, 0));
  CHECK(r.exit_code == cli::kPrecondition);
}
