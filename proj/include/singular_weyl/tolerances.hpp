#pragma once

#include <cstddef>

namespace sw {

// Every numeric threshold used by evaluation and verification lives here.
struct Tolerances {
  // 1F1 power series: stop after this many consecutive terms fall below
  // series_rel_tol * |partial sum|; give up after series_max_terms.
  double series_rel_tol = 1e-16;
  int series_small_run = 3;
  int series_max_terms = 1000;

  double contiguous = 1e-10;
  double kummer_collapse = 1e-12;
  double ode = 1e-9;

  // Finite differences: base step relative to max(1, |coordinate|), with one
  // Richardson level on top of the 4th-order central stencil.
  double fd_step = 1e-3;
  int fd_richardson_levels = 1;

  double pde_residual = 1e-6;
  double omega_residual = 1e-6;
  double ladder = 1e-8;
  double periodicity = 1e-12;
  double group = 1e-5;
  double picture_roundtrip = 1e-12;
  double equivariance = 1e-5;

  // Least-squares recovery of Heisenberg ladder coefficients.
  double lsq_residual = 1e-8;
  double rational_match = 1e-7;
  std::size_t lsq_min_points = 40;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace sw
