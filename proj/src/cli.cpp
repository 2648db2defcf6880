#include "nestedquiver/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nestedquiver/generators.hpp"

namespace nq::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return kParseError;
    case ErrorCode::ConeViolation:
    case ErrorCode::SingularAnu:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ChartUnavailable:
    case ErrorCode::DomainError:
    case ErrorCode::ExcludedLocus:
    case ErrorCode::IrregularPencil:
      return kPrecondition;
    default:
      return kVerificationFailed;
  }
}

std::size_t thread_count() {
  if (const char* env = std::getenv("NESTED_QUIVER_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(std::min(v, 256L));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace {

Outcome failure(const Error& e) {
  return {exit_code_for(e.code()), Json{{"error", error_code_name(e.code())}, {"message", e.what()}}};
}

bool is_enhanced(const Json& j) { return j.is_object() && j.contains("cp"); }

template <typename F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failure(e);
  } catch (const Json::exception& e) {
    return failure(Error(ErrorCode::ParseError, e.what()));
  }
}

Json residual_report(const std::vector<Matrix>& res, const std::vector<std::string>& names, bool& all) {
  Json out = Json::array();
  all = true;
  for (std::size_t k = 0; k < res.size(); ++k) {
    const bool zero = res[k].is_zero();
    all = all && zero;
    out.push_back(Json{{"name", names[k]}, {"zero", zero}, {"max_abs", to_string(res[k].max_abs())}});
  }
  return out;
}

struct Instance {
  std::string id;
  std::function<std::string()> run;  // empty string on success, otherwise the failure
};

std::string roundtrip_pair(const NestedIdealPair& p, int n) {
  const EnhRep x = nested_to_rep(p, n);
  if (!all_zero(enh_residuals(x))) return "relations fail";
  const NestedIdealPair q = rep_to_nested(x);
  if (!(q == p)) return "pair changed by the round trip";
  return {};
}

std::string roundtrip_rep(const EnhRep& x) {
  if (!all_zero(enh_residuals(x))) return "relations fail";
  const NestedIdealPair p = rep_to_nested(x);
  const EnhRep y = nested_to_rep(p, x.n);
  if (!(rep_to_nested(y) == p)) return "pair changed by the round trip";
  if (!same_orbit(x, y, default_theta(x.c, x.cp))) return "not in the same orbit";
  return {};
}

Json run_instances(std::vector<Instance>& items, std::size_t threads) {
  std::vector<Json> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < items.size();) {
      std::string why;
      try {
        why = items[k].run();
      } catch (const Error& e) {
        why = std::string(error_code_name(e.code())) + ": " + e.what();
      } catch (const Json::exception& e) {
        why = std::string("ParseError: ") + e.what();
      }
      results[k] = Json{{"id", items[k].id}, {"ok", why.empty()}, {"detail", why.empty() ? Json(nullptr) : Json(why)}};
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(threads, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(results.begin(), results.end(), [](const Json& a, const Json& b) { return a["id"] < b["id"]; });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r["ok"].get<bool>() ? 1 : 0;
  Json out{{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}, {"instances", results}};
  if (results.empty()) out["warning"] = "empty corpus: nothing to check";
  return out;
}

std::string pad(std::size_t k, std::size_t width) {
  std::string s = std::to_string(k);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

}  // namespace

Outcome cmd_check(const Json& input, const std::optional<EnhThetaParam>& theta) {
  return guarded([&]() -> Outcome {
    Json report;
    bool hold = false;
    StabilityVerdict v;
    if (is_enhanced(input)) {
      const EnhRep x = enh_from_json(input);
      x.validate();
      const EnhThetaParam p = theta ? *theta : default_theta(x.c, x.cp);
      report["kind"] = "enhanced";
      report["relations"] = residual_report(enh_residuals(x), enh_residual_names(x.n), hold);
      report["theta"] = to_json(p);
      v = is_theta_stable(x, p);
    } else {
      const HirzRep x = hirz_from_json(input);
      report["kind"] = "hirzebruch";
      report["relations"] = residual_report(hirz_residuals(x), hirz_residual_names(x.n), hold);
      v = is_gamma_stable(x);
    }
    report["relations_hold"] = hold;
    report["stability"] = to_json(v);
    report["nu"] = v.nu ? to_json(*v.nu) : Json(nullptr);
    return {hold && v.stable ? kOk : kVerificationFailed, report};
  });
}

Outcome cmd_convert(const std::string& direction, const Json& input, int n, const std::optional<EnhThetaParam>& theta) {
  return guarded([&]() -> Outcome {
    if (direction == "rep-to-cycle") {
      const EnhRep x = enh_from_json(input);
      x.validate();
      const EnhThetaParam p = theta ? *theta : default_theta(x.c, x.cp);
      return {kOk, to_json(rep_to_nested(x, p))};
    }
    if (direction == "cycle-to-rep") {
      if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
      return {kOk, to_json(nested_to_rep(pair_from_json(input), n))};
    }
    throw Error(ErrorCode::DomainError, "direction must be rep-to-cycle or cycle-to-rep");
  });
}

Outcome cmd_roundtrip(const RoundtripOptions& opts) {
  return guarded([&]() -> Outcome {
    std::vector<Instance> items;
    if (opts.corpus) {
      std::vector<std::filesystem::path> files;
      if (!std::filesystem::is_directory(*opts.corpus))
        throw Error(ErrorCode::ParseError, "corpus is not a directory: " + *opts.corpus);
      for (const auto& entry : std::filesystem::directory_iterator(*opts.corpus))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        const std::string path = f.string();
        const int n = opts.n;
        items.push_back({f.filename().string(), [path, n]() {
                           const Json j = read_json_file(path);
                           if (j.is_object() && j.contains("big")) {
                             const int pn = j.contains("n") ? j["n"].get<int>() : n;
                             return roundtrip_pair(pair_from_json(j), pn);
                           }
                           return roundtrip_rep(enh_from_json(j));
                         }});
      }
    } else {
      std::size_t k = 0;
      for (unsigned c = 1; c <= opts.cmax; ++c)
        for (unsigned cp = 0; cp < c; ++cp)
          for (const auto& p : enumerate_nested_monomial(cp, c, 2, opts.n))
            items.push_back({"monomial/" + pad(k++, 5), [p, n = opts.n] { return roundtrip_pair(p, n); }});
      for (std::size_t r = 0; r < opts.random; ++r) {
        const std::uint64_t seed = opts.seed;
        const unsigned cmax = std::max(1u, opts.cmax);
        items.push_back({"random/" + pad(r, 5), [seed, r, cmax, n = opts.n] {
                           Rng rng(seed * 1000003u + r);
                           const auto c = std::uniform_int_distribution<std::size_t>(1, cmax)(rng);
                           const auto cp = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
                           const PointPair pp = random_point_pair(rng, c, cp, n);
                           const EnhRep x = act(random_gauge(rng, c, cp), nested_to_rep(pp.pair, n));
                           if (!(rep_to_nested(x) == pp.pair)) return std::string("pair changed by the gauge");
                           return roundtrip_rep(x);
                         }});
      }
    }
    Json report = run_instances(items, opts.threads ? opts.threads : thread_count());
    return {report["failed"].get<std::size_t>() == 0 ? kOk : kVerificationFailed, report};
  });
}

Outcome cmd_count_fixed(unsigned cp, unsigned c, int charts, int n) {
  return guarded([&]() -> Outcome {
    if (cp >= c) throw Error(ErrorCode::DomainError, "need 0 <= cp < c");
    if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
    const auto specs = enumerate_monomial_specs(cp, c, charts);
    Json table = Json::array();
    bool all = true;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const auto& s = specs[k];
      Json row{{"index", k}, {"lambda0", s.lambda0}, {"mu0", s.mu0}, {"lambdaInf", s.lambdaI}, {"muInf", s.muI}};
      std::string why;
      try {
        const NestedIdealPair p = monomial_pair(s, n);
        row["nu"] = to_json(p.nu);
        row["big"] = to_json(p.big)["generators"];
        row["small"] = to_json(p.small)["generators"];
        why = roundtrip_pair(p, n);
      } catch (const Error& e) {
        why = std::string(error_code_name(e.code())) + ": " + e.what();
      }
      row["roundtrip"] = why.empty();
      if (!why.empty()) row["detail"] = why;
      all = all && why.empty();
      table.push_back(row);
    }
    Json report{{"cp", cp}, {"c", c}, {"charts", charts}, {"n", n}, {"count", specs.size()}, {"all_roundtrip", all},
                {"table", table}};
    return {all ? kOk : kVerificationFailed, report};
  });
}

Outcome cmd_monad_check(const Json& input, const std::optional<NuPoint>& nu_opt) {
  return guarded([&]() -> Outcome {
    const HirzRep x = is_enhanced(input) ? enh_from_json(input).left : hirz_from_json(input);
    x.validate();
    const NuPoint nu = nu_opt ? *nu_opt : find_regular_nu(x.A1, x.A2);
    const MonadComplex m = build_monad(x, nu);
    const CoxMatrix comp = check_complex(m);
    Json ranks = Json::array();
    bool full = true;
    for (const auto& pt : monad_sample_points()) {
      const auto [ra, rb] = fiber_ranks(m, pt);
      full = full && ra == m.c && rb == m.c;
      Json p = Json::array();
      for (const auto& q : pt) p.push_back(to_string(q));
      ranks.push_back(Json{{"point", p}, {"alpha_rank", ra}, {"beta_rank", rb}});
    }
    const bool bideg = bidegrees_consistent(m);
    Json report{{"nu", to_json(nu)},
                {"complex_zero", comp.is_zero()},
                {"bidegrees_consistent", bideg},
                {"full_rank", full},
                {"fiber_ranks", ranks}};
    if (!comp.is_zero()) report["composition"] = to_json(comp);
    return {comp.is_zero() && full && bideg ? kOk : kVerificationFailed, report};
  });
}

// ---------------------------------------------------------------------------

namespace {

Json load_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_json(ss.str());
  }
  return read_json_file(path);
}

std::optional<EnhThetaParam> theta_arg(const std::vector<std::string>& v) {
  if (v.empty()) return std::nullopt;
  if (v.size() != 4) throw Error(ErrorCode::ParseError, "--theta takes four rationals");
  return EnhThetaParam{parse_rational(v[0]), parse_rational(v[1]), parse_rational(v[2]), parse_rational(v[3])};
}

std::optional<NuPoint> nu_arg(const std::vector<std::string>& v) {
  if (v.empty()) return std::nullopt;
  if (v.size() != 2) throw Error(ErrorCode::ParseError, "--nu takes two rationals");
  try {
    return NuPoint(parse_rational(v[0]), parse_rational(v[1]));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) throw Error(ErrorCode::ParseError, e.what());
    throw;
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable enhanced Hirzebruch quiver representations and nested 0-cycles"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 1;
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_option("--seed", seed, "seed for random corpora");

  std::string input;
  std::vector<std::string> theta, nu;
  int n = 1;

  auto* check = app.add_subcommand("check", "relation residuals and stability of a representation");
  check->add_option("input", input, "representation JSON ('-' for stdin)")->required();
  check->add_option("--theta", theta, "four rationals")->expected(4);

  auto* convert = app.add_subcommand("convert", "representation <-> nested ideal pair");
  std::string direction;
  convert->add_option("--direction", direction)->required()->check(CLI::IsMember({"rep-to-cycle", "cycle-to-rep"}));
  convert->add_option("input", input, "input JSON ('-' for stdin)")->required();
  convert->add_option("--n", n, "surface index for cycle-to-rep");
  convert->add_option("--theta", theta, "four rationals")->expected(4);

  auto* roundtrip = app.add_subcommand("roundtrip", "round trips over a corpus or generated instances");
  RoundtripOptions ropts;
  std::string corpus;
  roundtrip->add_option("--corpus", corpus, "directory of pair/representation JSON files");
  roundtrip->add_option("--cmax", ropts.cmax, "largest c for generated instances");
  roundtrip->add_option("--n", ropts.n, "surface index");
  roundtrip->add_option("--random", ropts.random, "number of random point-pair instances");

  auto* count = app.add_subcommand("count-fixed", "torus-fixed nested pairs and their round trips");
  unsigned cp = 0, c = 1;
  int charts = 1;
  count->add_option("--cp", cp)->required();
  count->add_option("--c", c)->required();
  count->add_option("--charts", charts)->check(CLI::IsMember({1, 2}));
  count->add_option("--n", n);

  auto* monad = app.add_subcommand("monad-check", "monad complex property and fiber ranks");
  monad->add_option("input", input, "representation JSON ('-' for stdin)")->required();
  monad->add_option("--nu", nu, "two rationals")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  Outcome result;
  try {
    if (*check) {
      result = cmd_check(load_input(input), theta_arg(theta));
    } else if (*convert) {
      result = cmd_convert(direction, load_input(input), n, theta_arg(theta));
    } else if (*roundtrip) {
      if (!corpus.empty()) ropts.corpus = corpus;
      ropts.seed = seed;
      result = cmd_roundtrip(ropts);
    } else if (*count) {
      result = cmd_count_fixed(cp, c, charts, n);
    } else {
      result = cmd_monad_check(load_input(input), nu_arg(nu));
    }
  } catch (const Error& e) {
    result = {exit_code_for(e.code()), Json{{"error", error_code_name(e.code())}, {"message", e.what()}}};
  }

  const std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kPrecondition;
    }
    f << text;
  }
  if (result.report.contains("error")) err << result.report["message"].get<std::string>() << "\n";
  return result.exit_code;
}

}  // namespace nq::cli
