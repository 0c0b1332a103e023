#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "singular_weyl/ktype.hpp"
#include "singular_weyl/tolerances.hpp"

namespace sw {

/// g = [[a, b], [c, d]] with ad - bc = 1.
struct SL2Element {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
};

SL2Element sl2_diagonal(double eps);  ///< diag(e^ε, e^{-ε})
SL2Element sl2_upper(double eps);     ///< [[1, ε], [0, 1]]
SL2Element sl2_lower(double eps);     ///< [[1, 0], [ε, 1]]

/// (g.f)(t,x) = (a-ct)^{r-q/2} ε(g) e^{-sc‖x‖²/(a-ct)} f((dt-b)/(a-ct), x/(a-ct)).
/// The square-root factor ε is taken on its principal branch, where it equals
/// (a-ct)^{q/2}; the evaluator therefore requires a - ct > 0 and throws
/// DomainError otherwise.
Field sl2_action(const ParameterSet& params, const SL2Element& g, Field f);

struct HeisenbergElement {
  Eigen::VectorXd v1, v2;
  Complex w;
};

/// ((v1,v2,w).f)(t,x) = e^{s(v1·v2 - 2v2·x - t‖v2‖² + w)} f(t, x - v1 + t v2).
/// The exponent carries the sign for which the derivative at the identity is
/// -u·∇ + t v·∇ + s(w - 2v·x).
Field heisenberg_action(const ParameterSet& params, const HeisenbergElement& h, Field f);

/// (u.f)(t,x) = f(t, u^{-1} x) for orthogonal u.
Field orthogonal_action(const Eigen::MatrixXd& u, Field f);

/// A one-parameter subgroup ε ↦ g(ε) of one of the implemented families.
struct GroupFamily {
  enum class Kind { diagonal, upper, lower, heisenberg_u, heisenberg_v, heisenberg_w, rotation };
  Kind kind = Kind::diagonal;
  int j = 1;  ///< coordinate (heisenberg_u/v) or first axis of the rotation plane (j, j+1)

  std::string name() const;
};

/// All families available in dimension n.
std::vector<GroupFamily> group_families(int n);

/// g(ε).f for the family.
Field one_parameter_action(const GroupFamily& family, double eps, const ParameterSet& params, Field f);

/// The Lie algebra operator of the family applied to f at (t, x): the sl2 and
/// Heisenberg operators in closed form (finite differences in t and x), and
/// -(Xx)·∇ for a rotation generator X.
Complex infinitesimal_action(const GroupFamily& family, const Field& f, const ParameterSet& params, double t,
                             const Eigen::VectorXd& x, const Tolerances& tol = default_tolerances());

struct GroupCheck {
  std::string family;
  std::size_t points = 0;
  double max_residual = 0.0;  ///< relative to max(1, |f|)
  bool ok = false;
};

/// Compares d/dε (g(ε).f)(t,x) at ε = 0 with infinitesimal_action at seeded points.
GroupCheck check_group_derivative(const GroupFamily& family, const Field& f, const ParameterSet& params,
                                  std::size_t points, std::uint64_t seed,
                                  const Tolerances& tol = default_tolerances());

nlohmann::ordered_json to_json(const GroupCheck& c);

}  // namespace sw
