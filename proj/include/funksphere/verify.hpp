#ifndef FUNKSPHERE_VERIFY_HPP
#define FUNKSPHERE_VERIFY_HPP

#include <string>
#include <vector>

#include "funksphere/oracle.hpp"

namespace funksphere {

/// One exact-vs-oracle comparison row.
struct VerifyCase {
  std::string formula;  // which identity / operation was checked
  std::string inputs;   // human-readable inputs
  std::string exact;    // value from the closed formula
  std::string oracle;   // value from the independent reference
  std::string abs_err;
  std::string rel_err;
  bool pass = false;
};

struct VerifySummary {
  std::vector<VerifyCase> cases;
  bool all_pass = true;

  void add(VerifyCase c) {
    all_pass = all_pass && c.pass;
    cases.push_back(std::move(c));
  }
};

/// Tolerances used throughout verification: exact-path results must match the
/// oracle to 1e-12 relative, numeric-path results to 1e-10.
inline constexpr double kExactPathRelTol = 1e-12;
inline constexpr double kNumericPathRelTol = 1e-10;

/// Compare a region-formula result against the quadrature/moment oracle.
VerifyCase compare_region(const std::string& formula, const std::string& inputs,
                          const IntegralResult& exact, const Numeric& oracle);

/// Suites: "regions" (region formulas vs oracle), "transforms" (eigenvalue
/// and kernel checks vs oracle), "inversion" (three-way inverter agreement),
/// or "all".
VerifySummary run_verify_suite(const std::string& suite, int dim_max = 4, int deg_max = 4);

/// All degree-d exponent vectors in m variables, graded-lex-compatible order.
std::vector<Monomial> monomials_of_degree(int m, unsigned d);

/// The standard rational test direction: e1 for m fixed, or (3/5, 4/5, 0...).
RationalPoint pythagorean_direction(int m);

}  // namespace funksphere

#endif
