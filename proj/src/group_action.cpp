#include "singular_weyl/group_action.hpp"

#include <cmath>
#include <random>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/operators.hpp"

namespace sw {

SL2Element sl2_diagonal(double eps) { return {std::exp(eps), 0.0, 0.0, std::exp(-eps)}; }
SL2Element sl2_upper(double eps) { return {1.0, eps, 0.0, 1.0}; }
SL2Element sl2_lower(double eps) { return {1.0, 0.0, eps, 1.0}; }

Field sl2_action(const ParameterSet& params, const SL2Element& g, Field f) {
  if (std::abs(g.a * g.d - g.b * g.c - 1.0) > 1e-12) throw DomainError("sl2_action: determinant must be 1");
  return [g, params, f = std::move(f)](double t, const Eigen::VectorXd& x) -> Complex {
    const double den = g.a - g.c * t;
    if (den <= 0.0) throw DomainError("sl2_action: a - ct must be positive");
    const Complex pref = std::pow(den, params.r()) * std::exp(-params.s() * g.c * x.squaredNorm() / den);
    return pref * f((g.d * t - g.b) / den, x / den);
  };
}

Field heisenberg_action(const ParameterSet& params, const HeisenbergElement& h, Field f) {
  if (h.v1.size() != params.n() || h.v2.size() != params.n()) {
    throw DomainError("heisenberg_action: vectors have the wrong dimension");
  }
  return [h, params, f = std::move(f)](double t, const Eigen::VectorXd& x) -> Complex {
    const Complex e = h.v1.dot(h.v2) - 2.0 * h.v2.dot(x) - t * h.v2.squaredNorm() + h.w;
    return std::exp(params.s() * e) * f(t, x - h.v1 + t * h.v2);
  };
}

Field orthogonal_action(const Eigen::MatrixXd& u, Field f) {
  if (u.rows() != u.cols() || !(u.transpose() * u).isIdentity(1e-12)) {
    throw DomainError("orthogonal_action: matrix is not orthogonal");
  }
  return [ut = Eigen::MatrixXd(u.transpose()), f = std::move(f)](double t, const Eigen::VectorXd& x) {
    return f(t, ut * x);
  };
}

std::string GroupFamily::name() const {
  switch (kind) {
    case Kind::diagonal: return "sl2-diagonal";
    case Kind::upper: return "sl2-upper";
    case Kind::lower: return "sl2-lower";
    case Kind::heisenberg_u: return "heisenberg-u" + std::to_string(j);
    case Kind::heisenberg_v: return "heisenberg-v" + std::to_string(j);
    case Kind::heisenberg_w: return "heisenberg-w";
    case Kind::rotation: return "rotation-" + std::to_string(j) + std::to_string(j + 1);
  }
  return "?";
}

std::vector<GroupFamily> group_families(int n) {
  using K = GroupFamily::Kind;
  std::vector<GroupFamily> out{{K::diagonal}, {K::upper}, {K::lower}};
  for (int j = 1; j <= n; ++j) out.push_back({K::heisenberg_u, j});
  for (int j = 1; j <= n; ++j) out.push_back({K::heisenberg_v, j});
  out.push_back({K::heisenberg_w});
  for (int j = 1; j < n; ++j) out.push_back({K::rotation, j});
  return out;
}

namespace {

Eigen::MatrixXd rotation_generator(int n, int j) {
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, n);
  X(j - 1, j) = -1.0;
  X(j, j - 1) = 1.0;
  return X;
}

Eigen::VectorXd unit(int n, int j) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e[j - 1] = 1.0;
  return e;
}

}  // namespace

Field one_parameter_action(const GroupFamily& family, double eps, const ParameterSet& params, Field f) {
  using K = GroupFamily::Kind;
  const int n = params.n();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  switch (family.kind) {
    case K::diagonal: return sl2_action(params, sl2_diagonal(eps), std::move(f));
    case K::upper: return sl2_action(params, sl2_upper(eps), std::move(f));
    case K::lower: return sl2_action(params, sl2_lower(eps), std::move(f));
    case K::heisenberg_u: return heisenberg_action(params, {eps * unit(n, family.j), zero, 0.0}, std::move(f));
    case K::heisenberg_v: return heisenberg_action(params, {zero, eps * unit(n, family.j), 0.0}, std::move(f));
    case K::heisenberg_w: return heisenberg_action(params, {zero, zero, eps}, std::move(f));
    case K::rotation: {
      const Eigen::MatrixXd X = rotation_generator(n, family.j);
      // exp(εX) for a plane rotation generator.
      const Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n) + std::sin(eps) * X + (1.0 - std::cos(eps)) * X * X;
      return orthogonal_action(u, std::move(f));
    }
  }
  throw DomainError("unknown group family");
}

Complex infinitesimal_action(const GroupFamily& family, const Field& f, const ParameterSet& params, double t,
                             const Eigen::VectorXd& x, const Tolerances& tol) {
  using K = GroupFamily::Kind;
  const int n = params.n();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  switch (family.kind) {
    case K::diagonal: return fd_apply(OperatorSpec::sl2(1.0, 0.0, 0.0), f, params, t, x, tol);
    case K::upper: return fd_apply(OperatorSpec::sl2(0.0, 1.0, 0.0), f, params, t, x, tol);
    case K::lower: return fd_apply(OperatorSpec::sl2(0.0, 0.0, 1.0), f, params, t, x, tol);
    case K::heisenberg_u: return fd_apply(OperatorSpec::heisenberg(unit(n, family.j), zero, 0.0), f, params, t, x, tol);
    case K::heisenberg_v: return fd_apply(OperatorSpec::heisenberg(zero, unit(n, family.j), 0.0), f, params, t, x, tol);
    case K::heisenberg_w: return fd_apply(OperatorSpec::heisenberg(zero, zero, 1.0), f, params, t, x, tol);
    case K::rotation: {
      const Eigen::VectorXd Xx = rotation_generator(n, family.j) * x;
      Complex out(0.0);
      for (int i = 1; i <= n; ++i) {
        if (Xx[i - 1] != 0.0) out -= Xx[i - 1] * fd_dvector(f, t, x, i, tol);
      }
      return out;
    }
  }
  throw DomainError("unknown group family");
}

GroupCheck check_group_derivative(const GroupFamily& family, const Field& f, const ParameterSet& params,
                                  std::size_t points, std::uint64_t seed, const Tolerances& tol) {
  GroupCheck out;
  out.family = family.name();
  out.points = points;
  std::mt19937_64 rng(seed);
  for (std::size_t p = 0; p < points; ++p) {
    const auto pt = sample_noncompact(rng, params.n(), 0.3, 2.0, 1.0);
    // g(ε).f is built once per ε; the derivative in ε uses the same stencil
    // as the spatial oracle.
    const Field along = [&](double eps, const Eigen::VectorXd& x) {
      return one_parameter_action(family, eps, params, f)(pt.t, x);
    };
    const Complex group_derivative = fd_dscalar(along, 0.0, pt.x, tol);
    const Complex algebra = infinitesimal_action(family, f, params, pt.t, pt.x, tol);
    const double scale = std::max(1.0, std::abs(f(pt.t, pt.x)));
    out.max_residual = std::max(out.max_residual, std::abs(group_derivative - algebra) / scale);
  }
  out.ok = out.max_residual <= tol.group;
  return out;
}

nlohmann::ordered_json to_json(const GroupCheck& c) {
  return {{"operator", c.family}, {"points", c.points}, {"max_residual", c.max_residual}, {"match", c.ok}};
}

}  // namespace sw
