// anfgb: reduced Groebner bases over algebraic number fields.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "anfgb/problem.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kRoundLimit = 3, kExhausted = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Groebner bases over Q(a) via modular methods"};
  std::string input;
  std::size_t threads = 1;
  std::size_t initial_primes = 0;
  std::size_t max_rounds = 16;
  std::uint64_t seed = 1;
  bool json = false, oracle = false, allow_irreducible = false, no_weak = false, stats = false;
  app.add_option("--input", input, "problem file")->required();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--initial-primes", initial_primes, "first batch size (0 = automatic)");
  app.add_option("--max-rounds", max_rounds, "give up after this many rounds")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for prime selection and factoring");
  app.add_flag("--json", json, "print the basis as JSON");
  app.add_flag("--oracle", oracle, "use direct Buchberger over Q(a) instead");
  app.add_flag("--allow-irreducible", allow_irreducible, "accept primes where f stays irreducible");
  app.add_flag("--no-weak-prefilter", no_weak, "skip the cheap type-B prefilter");
  app.add_flag("--stats", stats, "print run statistics to stderr");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input);
  if (!in) {
    std::cerr << "anfgb: cannot open " << input << "\n";
    return kParse;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    const anfgb::Problem problem = anfgb::parse_problem(buf.str());
    const auto start = std::chrono::steady_clock::now();
    anfgb::GroebnerBasis<anfgb::NumberField> basis;
    anfgb::ModularStats ms;
    if (oracle) {
      basis = anfgb::buchberger_direct(problem);
    } else {
      anfgb::ModularConfig config;
      config.workers = threads;
      config.initial_primes = initial_primes;
      config.max_rounds = max_rounds;
      config.seed = seed;
      config.allow_irreducible = allow_irreducible;
      config.weak_prefilter = !no_weak;
      anfgb::NfResult r = anfgb::nfmodstd(problem, config);
      basis = std::move(r.basis);
      ms = r.stats;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (json ? anfgb::to_json(basis, problem) + "\n" : anfgb::to_text(basis));
    if (stats) {
      std::cerr << "time " << secs << "s, " << basis.size() << " elements";
      if (!oracle) {
        std::cerr << ", rounds " << ms.rounds << ", primes tried " << ms.primes_tried
                  << ", type-B rejected " << ms.type_b_rejected << ", unlucky deleted "
                  << ms.unlucky_deleted << ", primes in lift " << ms.primes_in_lift;
      }
      std::cerr << "\n";
    }
    return kOk;
  } catch (const anfgb::ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kParse;
  } catch (const anfgb::Error& e) {
    std::cerr << "anfgb: " << e.what() << "\n";
    switch (e.code()) {
      case anfgb::ErrorCode::RoundLimitExceeded: return kRoundLimit;
      case anfgb::ErrorCode::ExhaustedCandidates: return kExhausted;
      case anfgb::ErrorCode::NonMonicMinpoly:
      case anfgb::ErrorCode::UndeclaredVariable:
      case anfgb::ErrorCode::DuplicateVariable: return kParse;
      default: return kFailure;
    }
  }
}
