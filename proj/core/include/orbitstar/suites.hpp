#pragma once

#include "orbitstar/report.hpp"

#include <cstdint>
#include <optional>

namespace orbitstar {

// Verification suites shared by the command-line tool and the acceptance run.
// Each returns a Report whose records carry no prefix.

Report bgs_suite(unsigned max_n, int random_chains, std::uint64_t seed);
Report restricted_complex_suite(std::uint64_t seed);
Report solve_suite(const std::string& family, int n);  // sl, so, sp
Report weights_suite(const std::string& family, int n);  // sl, so
Report exceptional_suite(const std::string& name, std::optional<Rational> D = std::nullopt);
Report so3_suite(const Rational& l);
Report special_products_suite(int triples, std::uint64_t seed);
Report repcheck_suite(int n, int N);
Report rep_parameters_suite(int max_n);
Report abelian_suite();

struct VerifyAllOptions {
  int max_rank = 4;
  std::uint64_t seed = 1;
};
Report verify_all(const VerifyAllOptions& opt);

bool is_exceptional_name(const std::string& name);

}  // namespace orbitstar
