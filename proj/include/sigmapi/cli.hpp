#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigmapi/decide.hpp"
#include "sigmapi/terms.hpp"

namespace sigmapi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitEqual = 0,
  kExitNotEqual = 1,
  kExitRequiresOracle = 2,
  kExitUsage = 64,
  kExitParse = 65,
  kExitType = 66,
  kExitGuard = 70,
};

/// Version of the JSON documents written with --json.
inline constexpr int kJsonSchemaVersion = 1;

/// Runs the tool on `args` (without the program name). `color` turns on ANSI
/// colouring of verdicts.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

/// Full binary type of the given height with leaves 1, alternating + and *
/// from the root down.
ObjectType balanced_type(int height, bool product_root);

/// One benchmark instance: X = balanced_type(h, true), A = balanced_type(h, false)
/// and two equal terms X -> A that differ by the order of every s_j / p_i pair.
/// The terms are definite from height 4 on; below that every map X -> A is
/// pointed.
struct BenchCase {
  int height;
  ObjectType dom;
  ObjectType cod;
  Term left;
  Term right;
};
BenchCase bench_case(int height);

struct BenchRow {
  int height = 0;
  std::size_t size_X = 0;
  std::size_t size_A = 0;
  std::size_t steps = 0;
  double micros = 0;
  Verdict verdict;
};
/// Decides the pair, keeping the fastest of `repeat` timings.
BenchRow run_bench(const BenchCase& c, int repeat = 1);

}  // namespace sigmapi
