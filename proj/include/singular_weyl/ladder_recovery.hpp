#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "singular_weyl/operators.hpp"

namespace sw {

/// Outcome of recovering the E_j^± coefficients of one K-type numerically.
///
/// The finite-difference image E_j^± F is sampled at `points` seeded compact
/// points and projected by least squares onto the (at most four) candidate
/// K-type directions. Each recovered coefficient is divided by the unit (i or
/// s) of its slot and matched to the closest rational with denominator at
/// most 4b(b-1), b = 2l+k+n/2.
struct LadderRecovery {
  KTypeIndex index;
  int j = 1;
  int sign = 1;
  std::size_t points = 0;
  /// max |A c - E F| / max(1, max |E F|) over the sample.
  double max_residual = 0.0;
  std::int64_t denominator_bound = 1;
  std::array<bool, 4> present{};
  std::array<Complex, 4> recovered{};
  std::array<std::optional<Rational>, 4> recovered_rational{};
  std::array<LadderCoefficient, 4> derived{};
  std::array<LadderCoefficient, 4> printed{};
  /// λ' - λ for each present direction.
  std::array<std::int64_t, 4> eigenvalue_shift{};

  bool residual_ok = false;
  bool rational_ok = false;
  bool matches_derived = false;
  bool matches_printed = false;
  bool shifts_ok = false;

  /// The criterion: small residual, rational coefficients equal to the
  /// shipped table, expected eigenvalue shifts.
  bool ok() const { return residual_ok && rational_ok && matches_derived && shifts_ok; }
};

LadderRecovery recover_ladder(const KTypeVector& F, int j, int sign, std::uint64_t seed,
                              const Tolerances& tol = default_tolerances(),
                              CoefficientTable printed = CoefficientTable::printed_statement);

/// {operator, index, points, max_residual, recovered_coefficients,
///  paper_coefficients, match, ...}
nlohmann::ordered_json to_json(const LadderRecovery& r);

}  // namespace sw
