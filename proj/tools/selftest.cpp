#include "selftest.hpp"

#include <string>
#include <vector>

#include "graphweight/dyadic.hpp"
#include "graphweight/graph.hpp"
#include "graphweight/invariants.hpp"

namespace graphweight::tools {

namespace {

struct Golden {
  const char* name;
  Graph graph;
  DyadicRational value;
};

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };

  const std::vector<Golden> golden{
      {"K1", Graph(1), DyadicRational(3, 3)},
      {"K2", Graph::complete(2), DyadicRational(-3, 6)},
      {"K3", Graph::complete(3), DyadicRational(15, 9)},
      {"C4", Graph::cycle(4), DyadicRational(33, 12)},
      {"C5", Graph::cycle(5), DyadicRational(63, 15)},
  };
  for (const auto& [name, g, expected] : golden) {
    for (Formula f : {Formula::definition, Formula::eulerian, Formula::corank}) {
      const auto got = compute(f, g).value;
      report(got == expected, std::string(name) + " " + std::string(to_string(f)) + " = " +
                                  got.to_fraction_string() + " (expected " +
                                  expected.to_fraction_string() + ")");
    }
  }

  // Dyadic arithmetic against hand-computed results.
  const DyadicRational three_eighths(3, 3);
  report(DyadicRational(12, 5) == three_eighths, "normalise 12/2^5 -> 3/2^3");
  report(DyadicRational(0, 7).exponent() == 0, "zero has exponent 0");
  report(three_eighths + DyadicRational(1, 3) == DyadicRational(1, 1), "3/8 + 1/8 = 1/2");
  report(DyadicRational(-3, 6) * three_eighths == DyadicRational(-9, 9), "-3/64 * 3/8 = -9/512");
  report(DyadicRational(15, 9) - DyadicRational(15, 9) == DyadicRational(0, 0), "x - x = 0");
  report(DyadicRational(15, 9).to_exact_string() == "15/2^9", "exact string 15/2^9");
  report(DyadicRational::parse_exact("-3/2^6") == DyadicRational(-3, 6), "parse -3/2^6");
  report(DyadicRational(3, 3).to_double() == 0.375, "3/8 as double");
  return failures;
}

}  // namespace graphweight::tools
