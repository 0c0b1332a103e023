// Acceptance driver: one PASS/FAIL line per criterion with its runtime.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/group_action.hpp"
#include "singular_weyl/harmonic.hpp"
#include "singular_weyl/ladder_recovery.hpp"
#include "singular_weyl/structure.hpp"
#include "singular_weyl/verify.hpp"

#ifndef SW_GOLDEN_DIR
#define SW_GOLDEN_DIR "tests/golden"
#endif

using namespace sw;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // <= 0: no limit beyond "negligible" (1 s)
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<ParameterSet> all_params(int n_min, int n_max) {
  std::vector<ParameterSet> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int q = 0; q < 4; ++q) {
      out.push_back(ParameterSet::schrodinger(n, q));
      out.push_back(ParameterSet::heat(n, q));
    }
  }
  return out;
}

std::string where(const KTypeVector& F) {
  const auto& p = F.params();
  const auto& i = F.index();
  std::ostringstream s;
  s << "n=" << p.n() << " q=" << p.q() << " s=" << p.s() << " (m,l,k)=(" << i.m << "," << i.l << "," << i.k << ")";
  return s.str();
}

std::set<std::int64_t> brute_force(int n, std::int64_t bound) {
  std::set<std::int64_t> out;
  if (n == 1) {
    for (std::int64_t t = 1; t * (t + 1) / 2 <= bound; ++t) out.insert(t * (t + 1) / 2);
    return out;
  }
  for (std::int64_t j = 0; n + 2 * j <= bound; ++j) {
    for (std::int64_t l = 1; l <= j + 1 && l * (n + 2 * j) <= bound; ++l) out.insert(l * (n + 2 * j));
  }
  return out;
}

Outcome admissibility() {
  std::size_t mismatches = 0, checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto expected = brute_force(n, 5000);
    for (std::int64_t lambda = 0; lambda <= 5000; ++lambda) {
      ++checked;
      if (is_admissible(n, lambda) != (expected.count(lambda) > 0)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " values, " + std::to_string(mismatches) + " mismatches"};
}

Outcome paper_pairs() {
  const auto pairs = admissible_pairs(3, 75);
  const std::vector<LkPair> expected{{5, 2}, {3, 9}, {1, 36}};
  std::string got;
  for (const auto& p : pairs) got += "(" + std::to_string(p.l) + "," + std::to_string(p.k) + ")";
  return {pairs == expected, "got " + got};
}

Outcome contiguous() {
  std::size_t printed = 0;
  const auto c = check_contiguous(kSeed, 1000, default_tolerances(), &printed);
  return {c.ok() && c.count > 0, std::to_string(c.count) + " residuals, max " + fmt(c.max_residual) +
                                     "; WARN printed form of the second three-term relation fails on " +
                                     std::to_string(printed) + "/1000 samples"};
}

Outcome harmonicity() {
  CheckSummary exact("harmonic", 0.0);
  std::size_t dim_mismatch = 0, elements = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 6; ++k) {
      if (n == 1 && k > 1) continue;
      const auto basis = harmonic_basis(n, k);
      if (static_cast<std::int64_t>(basis.size()) != harmonic_dimension(n, k)) ++dim_mismatch;
      for (const auto& h : basis) {
        ++elements;
        check_harmonic_exact(h, exact);
      }
    }
  }
  return {exact.ok() && dim_mismatch == 0, std::to_string(elements) + " basis elements, " +
                                               std::to_string(exact.count) + " exact checks, " +
                                               std::to_string(exact.failures) + " failures, " +
                                               std::to_string(dim_mismatch) + " dimension mismatches"};
}

// The lattice of criteria 5, 6 and 8: n 1..4, every q, both presets,
// admissible λ ≤ 60, |m| ≤ 30.
const std::vector<KTypeVector>& full_lattice() {
  static const std::vector<KTypeVector> lattice = [] {
    std::vector<KTypeVector> out;
    for (const auto& p : all_params(1, 4)) {
      auto part = ktype_lattice(p, 60, 30);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return lattice;
}

Outcome pde_kernel() {
  const auto& lattice = full_lattice();
  const double tol = default_tolerances().pde_residual;
  CheckSummary c("pde", tol);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    c.record(pde_max_residual(lattice[i], 50, mix_seed(kSeed, 5, i)), where(lattice[i]));
  }
  return {c.ok() && !lattice.empty(), std::to_string(lattice.size()) + " K-types x 50 points, max " +
                                          fmt(c.max_residual) + " (tol " + fmt(tol) + ")" +
                                          (c.examples.empty() ? "" : ", first failure " + c.examples.front())};
}

Outcome ladder_closed_forms() {
  const auto& lattice = full_lattice();
  const double tol = default_tolerances().ladder;
  CheckSummary c("closed_forms", tol);
  std::size_t boundary_bad = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto r = closed_form_residuals(lattice[i], 10, mix_seed(kSeed, 6, i));
    c.record(std::max({r.kappa, r.eta_plus, r.eta_minus}), where(lattice[i]));
    if (!r.boundary_ok) ++boundary_bad;
  }
  return {c.ok() && boundary_bad == 0 && !lattice.empty(),
          std::to_string(lattice.size()) + " K-types x 10 points, max " + fmt(c.max_residual) + " (tol " + fmt(tol) +
              "), boundary zero violations " + std::to_string(boundary_bad)};
}

// Reduced lattice for the least-squares recovery: λ ≤ 30, |m| ≤ 10.
Outcome heisenberg() {
  std::size_t runs = 0, failures = 0, printed_mismatch = 0;
  double max_residual = 0.0;
  std::string first_failure;
  for (const auto& p : all_params(1, 4)) {
    const auto lattice = ktype_lattice(p, 30, 10);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (int j = 1; j <= p.n(); ++j) {
        for (int sign : {+1, -1}) {
          const auto r = recover_ladder(lattice[i], j, sign, mix_seed(kSeed, 7, i, 2 * j + (sign > 0)));
          ++runs;
          max_residual = std::max(max_residual, r.max_residual);
          if (!r.ok()) {
            ++failures;
            if (first_failure.empty()) first_failure = where(lattice[i]) + " j=" + std::to_string(j);
          }
          if (!r.matches_printed) ++printed_mismatch;
        }
      }
    }
  }
  return {failures == 0 && runs > 0,
          std::to_string(runs) + " recoveries, max lsq residual " + fmt(max_residual) + ", " +
              std::to_string(failures) + " failures" + (first_failure.empty() ? "" : " (" + first_failure + ")") +
              "; WARN " + std::to_string(printed_mismatch) + " differ from the published coefficient table"};
}

Outcome periodicity() {
  const auto& lattice = full_lattice();
  const double tol = default_tolerances().periodicity;
  CheckSummary c("periodicity", tol);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    c.record(periodicity_max_residual(lattice[i], 20, mix_seed(kSeed, 8, i)), where(lattice[i]));
  }
  return {c.ok() && !lattice.empty(), std::to_string(lattice.size()) + " K-types x 20 points x j=1..4, max " +
                                          fmt(c.max_residual) + " (tol " + fmt(tol) + ")"};
}

Outcome group_consistency() {
  std::size_t runs = 0, failures = 0;
  double max_residual = 0.0;
  std::string first_failure;
  for (const auto& p : all_params(1, 4)) {
    const auto lattice = ktype_lattice(p, 12, 6);
    for (std::size_t i = 0; i < lattice.size(); i += 3) {
      const Field f = to_noncompact(lattice[i]);
      for (const auto& family : group_families(p.n())) {
        const auto c = check_group_derivative(family, f, p, 20, mix_seed(kSeed, 9, i, runs));
        ++runs;
        max_residual = std::max(max_residual, c.max_residual);
        if (!c.ok) {
          ++failures;
          if (first_failure.empty()) first_failure = where(lattice[i]) + " " + family.name();
        }
      }
    }
  }
  return {failures == 0 && runs > 0, std::to_string(runs) + " family checks x 20 points, max " + fmt(max_residual) +
                                         (first_failure.empty() ? "" : ", first failure " + first_failure)};
}

Outcome structure() {
  std::size_t bad = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    for (int q = 0; q < 4; ++q) {
      const std::string path =
          std::string(SW_GOLDEN_DIR) + "/composition/n" + std::to_string(n) + "_q" + std::to_string(q) + ".txt";
      std::ifstream in(path);
      std::stringstream golden;
      golden << in.rdbuf();
      const auto params = ParameterSet::schrodinger(n, q);
      bool ok = in.good() || in.eof();
      ok = ok && !golden.str().empty() && golden.str() == to_text(composition_series(params));
      // per-pair flags at the smallest admissible λ
      const auto lambda = enumerate_admissible(n, 40).front();
      for (const auto& d : decompose(params, lambda)) {
        const bool plus = (q - n) % 4 == 0, minus = (q + n) % 4 == 0;
        ok = ok && d.has_lowest == plus && d.has_highest == minus && d.irreducible == (!plus && !minus);
      }
      if (!ok) {
        ++bad;
        if (first.empty()) first = path;
      }
    }
  }
  return {bad == 0, "16 cases, " + std::to_string(bad) + " mismatches" + (first.empty() ? "" : " (" + first + ")")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "admissibility closed form vs enumeration", 5, admissibility},
      {2, "admissible pairs for n=3, lambda=75", 0, paper_pairs},
      {3, "contiguous relations", 5, contiguous},
      {4, "exact harmonicity and decomposition", 10, harmonicity},
      {5, "PDE kernel", 60, pde_kernel},
      {6, "ladder closed forms", 60, ladder_closed_forms},
      {7, "Heisenberg action", 90, heisenberg},
      {8, "periodicity", 5, periodicity},
      {9, "group/algebra consistency", 10, group_consistency},
      {10, "structure generation", 0, structure},
  };
  // Criteria 5, 6 and 8 share one lattice; criterion 5 pays for building it.
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double limit = c.limit_s > 0 ? c.limit_s : 1.0;
    const bool in_time = secs < limit;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s: %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                secs, limit, in_time ? "" : " TOO SLOW", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
