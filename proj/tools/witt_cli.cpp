#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "witt/cohomology.hpp"
#include "witt/parse.hpp"
#include "witt/render.hpp"
#include "witt/report.hpp"
#include "witt/suites.hpp"

namespace {

// 0 success / positive verdict, 1 usage or parse error, 2 negative verdict
// or failed premise, 3 witness search cap exhausted.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitCap = 3;

struct Options {
  int rank = 0;
  std::uint64_t seed = 0;
  int window = 3;
  int cap = 8;
  int samples = 100;
  std::string format = "text";
};

witt::AlgebraConfig config_of(const Options& o) {
  witt::AlgebraConfig cfg;
  cfg.rank = o.rank;
  cfg.seed = o.seed;
  cfg.sample_window = o.window;
  cfg.escalation_cap = o.cap;
  cfg.validate();
  return cfg;
}

void emit(const Options& o, const std::string& command,
          const std::string& result) {
  if (o.format == "doc") {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["result"] = result;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for generalized Witt algebras and "
               "coboundary Lie bialgebra structures"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--rank", opt.rank, "rank of the coordinate lattice")
      ->required();
  app.add_option("--seed", opt.seed, "seed for sampled checks");
  app.add_option("--window", opt.window, "coordinate bound for sampled data");
  app.add_option("--cap", opt.cap, "escalation cap for witness searches");
  app.add_option("--samples", opt.samples, "sample count for seeded checks");
  app.add_option("--format", opt.format, "output format: text or doc")
      ->check(CLI::IsMember({"text", "doc"}));

  std::string lhs, rhs, arg_k, suite, degree_text;
  std::vector<std::string> torus_args;
  int arity = 0;

  auto* cmd_bracket = app.add_subcommand("bracket", "bracket of two elements");
  cmd_bracket->add_option("lhs", lhs)->required();
  cmd_bracket->add_option("rhs", rhs)->required();

  auto* cmd_act = app.add_subcommand("act", "diagonal action of an element on a tensor");
  cmd_act->add_option("element", lhs)->required();
  cmd_act->add_option("tensor", rhs)->required();

  auto* cmd_cobracket = app.add_subcommand("cobracket", "cobracket induced by r at an element");
  cmd_cobracket->add_option("r", lhs)->required();
  cmd_cobracket->add_option("x", rhs)->required();

  auto* cmd_cybe = app.add_subcommand("cybe", "Yang-Baxter element c(r)");
  cmd_cybe->add_option("r", lhs)->required();

  auto* cmd_classify = app.add_subcommand("classify", "classify a candidate r");
  cmd_classify->add_option("r", lhs)->required();

  auto* cmd_mich = app.add_subcommand("michaelis", "build r from an eigenpair [a,b] = k b");
  cmd_mich->add_option("a", lhs)->required();
  cmd_mich->add_option("b", rhs)->required();
  cmd_mich->add_option("k", arg_k)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a seeded invariant suite");
  cmd_verify->add_option("suite", suite)->required();

  auto* cmd_witness = app.add_subcommand("witness", "find an element acting nontrivially");
  cmd_witness->add_option("tensor", lhs)->required();
  cmd_witness->add_option("--arity", arity, "2 or 3; inferred when omitted")
      ->check(CLI::IsMember({0, 2, 3}));

  auto* cmd_solve = app.add_subcommand(
      "solve-inner", "recover the inner generator from torus values");
  cmd_solve->add_option("degree", degree_text)->required();
  cmd_solve->add_option("values", torus_args, "one tensor per torus basis vector");

  auto* cmd_normalize = app.add_subcommand(
      "normalize", "print the canonical form of an element or tensor");
  cmd_normalize->add_option("input", lhs)->required();
  cmd_normalize->add_flag("--element", "treat the input as an element");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const witt::AlgebraConfig cfg = config_of(opt);
    const auto format = witt::report_format_from_name(opt.format);

    if (app.got_subcommand(cmd_bracket)) {
      const auto u = witt::parse_element(lhs, cfg.rank);
      const auto w = witt::parse_element(rhs, cfg.rank);
      emit(opt, "bracket", witt::render(witt::bracket(u, w)));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_act)) {
      const auto a = witt::parse_element(lhs, cfg.rank);
      const auto t = witt::parse_tensor_any(rhs, cfg.rank);
      const std::string result =
          std::holds_alternative<witt::Tensor2>(t)
              ? witt::render(witt::act(a, std::get<witt::Tensor2>(t)))
              : witt::render(witt::act(a, std::get<witt::Tensor3>(t)));
      emit(opt, "act", result);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_cobracket)) {
      const witt::RMatrix r{witt::parse_tensor2(lhs, cfg.rank)};
      const auto x = witt::parse_element(rhs, cfg.rank);
      emit(opt, "cobracket", witt::render(witt::cobracket(r, x)));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_cybe)) {
      const witt::RMatrix r{witt::parse_tensor2(lhs, cfg.rank)};
      emit(opt, "cybe", witt::render(witt::cybe(r)));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_classify)) {
      const witt::RMatrix r{witt::parse_tensor2(lhs, cfg.rank)};
      const auto rep = witt::classify(r, opt.samples, cfg);
      std::cout << witt::render_report(rep, cfg, opt.samples, format);
      return rep.verdict == witt::Verdict::kTriangularCoboundary ? kExitOk
                                                                 : kExitNegative;
    }

    if (app.got_subcommand(cmd_mich)) {
      const auto a = witt::parse_element(lhs, cfg.rank);
      const auto b = witt::parse_element(rhs, cfg.rank);
      const auto k = witt::parse_scalar(arg_k);
      emit(opt, "michaelis", witt::render(witt::michaelis(a, b, k).value));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_verify)) {
      const auto rep = witt::run_suite(suite, cfg, opt.samples);
      std::cout << witt::render_report(rep, format);
      return rep.passed() ? kExitOk : kExitNegative;
    }

    if (app.got_subcommand(cmd_witness)) {
      const auto t =
          arity == 3 ? std::variant<witt::Tensor2, witt::Tensor3>(
                           witt::parse_tensor3(lhs, cfg.rank))
          : arity == 2 ? std::variant<witt::Tensor2, witt::Tensor3>(
                             witt::parse_tensor2(lhs, cfg.rank))
                       : witt::parse_tensor_any(lhs, cfg.rank);
      std::string result;
      if (std::holds_alternative<witt::Tensor3>(t)) {
        const auto& c = std::get<witt::Tensor3>(t);
        result = c.is_zero() ? "zero"
                             : witt::render(witt::annihilator_witness(c, cfg));
      } else {
        const auto& c = std::get<witt::Tensor2>(t);
        if (c.is_zero()) {
          result = "zero";
        } else {
          const auto w = witt::alternating_witness(c, cfg);
          result = w ? witt::render(*w) : "alternating";
        }
      }
      emit(opt, "witness", result);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_normalize)) {
      std::string result;
      if (cmd_normalize->count("--element") > 0) {
        result = witt::render(witt::parse_element(lhs, cfg.rank));
      } else {
        const auto t = witt::parse_tensor_any(lhs, cfg.rank);
        result = std::holds_alternative<witt::Tensor2>(t)
                     ? witt::render(std::get<witt::Tensor2>(t))
                     : witt::render(std::get<witt::Tensor3>(t));
      }
      emit(opt, "normalize", result);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_solve)) {
      const auto degree = witt::parse_point(degree_text, cfg.rank);
      if (static_cast<int>(torus_args.size()) != cfg.rank)
        throw witt::DimensionError(
            "expected " + std::to_string(cfg.rank) +
            " torus values, got " + std::to_string(torus_args.size()));
      std::vector<witt::Tensor2> values;
      values.reserve(torus_args.size());
      for (const auto& text : torus_args)
        values.push_back(witt::parse_tensor2(text, cfg.rank));
      emit(opt, "solve-inner", witt::render(witt::solve_inner(values, degree)));
      return kExitOk;
    }
  } catch (const witt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const witt::WitnessCapError& e) {
    std::cerr << "witness search gave up: " << e.what() << "\n";
    return kExitCap;
  } catch (const witt::PremiseError& e) {
    std::cerr << "premise violated: " << e.what() << "\n";
    return kExitNegative;
  } catch (const witt::ConsistencyError& e) {
    std::cerr << "inconsistent data: " << e.what() << "\n";
    return kExitNegative;
  } catch (const witt::DegreeError& e) {
    std::cerr << "unsupported degree: " << e.what() << "\n";
    return kExitNegative;
  } catch (const witt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  return kExitUsage;
}
