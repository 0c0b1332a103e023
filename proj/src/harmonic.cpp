#include "singular_weyl/harmonic.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "singular_weyl/errors.hpp"

namespace sw {

HarmonicPolynomial::HarmonicPolynomial(Polynomial p, int k) : poly_(std::move(p)), k_(k) {
  if (!poly_.is_homogeneous(degree())) {
    throw DomainError("harmonic polynomial must be homogeneous of degree " + std::to_string(degree()));
  }
  if (!laplacian(poly_).is_zero()) throw DomainError("polynomial is not harmonic");
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Kernel of the Laplacian from degree-k monomials to degree-(k-2) monomials,
// by exact reduced row echelon form. Columns run in ascending graded-lex
// order, so every kernel vector has its free monomial as leading term.
std::vector<Polynomial> laplacian_kernel(int n, int k) {
  const auto cols = monomials_of_degree(n, k);
  std::vector<Polynomial> out;
  if (k < 2) {
    for (const auto& e : cols) out.push_back(Polynomial::monomial(n, e));
    return out;
  }
  const auto rows = monomials_of_degree(n, k - 2);
  std::map<Exponents, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

  const std::size_t R = rows.size();
  const std::size_t C = cols.size();
  std::vector<std::vector<Rational>> m(R, std::vector<Rational>(C));
  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      const int e = cols[c][j];
      if (e < 2) continue;
      Exponents d = cols[c];
      d[j] -= 2;
      m[row_index.at(d)][c] += Rational(e * (e - 1));
    }
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t pivot = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == R) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = 1 / m[rank][c];
    for (std::size_t cc = c; cc < C; ++cc) {
      if (m[rank][cc] != 0) m[rank][cc] *= inv;
    }
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t cc = c; cc < C; ++cc) {
        if (m[rank][cc] != 0) m[r][cc] -= factor * m[rank][cc];
      }
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Polynomial v = Polynomial::monomial(n, cols[f]);
    for (std::size_t r = 0; r < rank; ++r) {
      if (m[r][f] != 0) v -= Polynomial::monomial(n, cols[pivot_cols[r]], GaussianRational(m[r][f]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::int64_t harmonic_dimension(int n, int k) {
  if (n < 1 || k < 0) throw DomainError("harmonic_dimension: need n >= 1, k >= 0");
  return binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
}

std::vector<HarmonicPolynomial> harmonic_basis(int n, int k) {
  if (n < 1) throw DomainError("harmonic_basis: n must be >= 1");
  if (k < 0) throw DomainError("harmonic_basis: k must be >= 0 (use signed_harmonic for n = 2)");
  if (n == 1 && k >= 2) throw DomainError("harmonic_basis: H_k(R) = 0 for k >= 2");
  std::vector<HarmonicPolynomial> basis;
  for (auto& p : laplacian_kernel(n, k)) {
    const GaussianRational lead = p.leading_coefficient();
    p *= GaussianRational(1) / lead;
    basis.emplace_back(std::move(p), k);
  }
  std::sort(basis.begin(), basis.end(), [](const HarmonicPolynomial& a, const HarmonicPolynomial& b) {
    return GradedLex{}(a.polynomial().leading_exponents(), b.polynomial().leading_exponents());
  });
  if (static_cast<std::int64_t>(basis.size()) != harmonic_dimension(n, k)) {
    throw InternalConsistencyError("harmonic_basis: kernel dimension disagrees with closed formula");
  }
  return basis;
}

HarmonicPolynomial signed_harmonic(int k) {
  const Polynomial y1 = Polynomial::variable(2, 1);
  const Polynomial y2 = Polynomial::variable(2, 2);
  const GaussianRational unit = k >= 0 ? GaussianRational::i() : -GaussianRational::i();
  const Polynomial base = y1 + unit * y2;
  return HarmonicPolynomial(base.pow(k < 0 ? -k : k), k);
}

HarmonicPolynomial representative_harmonic(int n, int k) {
  if (n == 2) return signed_harmonic(k);
  if (n == 1 || k < 2) return harmonic_basis(n, k).back();
  return zonal_harmonic(n, k);
}

HarmonicPolynomial zonal_harmonic(int n, int k) {
  if (n < 3 || k < 0) throw DomainError("zonal_harmonic: need n >= 3, k >= 0");
  // Σ c_j y1^{k-2j} ρ^{2j}, c_0 = 1, with
  // c_{j+1} = -c_j (k-2j)(k-2j-1) / (2(j+1)(2k-2j+n-4)) from Δ = 0.
  const Polynomial y1 = Polynomial::variable(n, 1);
  const Polynomial rho2 = Polynomial::rho_squared(n);
  Polynomial out = Polynomial::constant(n, GaussianRational(0));
  Rational c(1);
  Polynomial rho_pow = Polynomial::constant(n, GaussianRational(1));
  for (int j = 0; 2 * j <= k; ++j) {
    out += (y1.pow(k - 2 * j) * rho_pow) * GaussianRational(c);
    if (2 * (j + 1) > k) break;
    c = -c * make_rational((k - 2 * j) * (k - 2 * j - 1), 2 * (j + 1) * (2 * k - 2 * j + n - 4));
    rho_pow = rho_pow * rho2;
  }
  HarmonicPolynomial h(std::move(out), k);
  h.zonal_ = true;
  return h;
}

double zonal_value(int n, int k, const double* y) {
  // Extended precision: the FD oracles difference these values at h ~ 1e-3.
  const long double alpha = 0.5L * (n - 2);
  long double rho2 = 0.0L;
  for (int i = 0; i < n; ++i) rho2 += static_cast<long double>(y[i]) * y[i];
  const long double y1 = y[0];
  long double prev = 1.0L, cur = y1;
  if (k == 0) return 1.0;
  for (int m = 1; m < k; ++m) {
    const long double next = y1 * cur - m * (m + 2 * alpha - 1) / (4 * (alpha + m) * (alpha + m - 1)) * rho2 * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

Rational c_const(int k, int n) {
  if (k < 0 || n < 1) throw DomainError("c_const: need k >= 0 and n >= 1");
  if (k == 0 && n == 2) return Rational(0);
  return make_rational(1, 2 * k + n - 2);
}

YjDecomposition decompose_yj(const HarmonicPolynomial& h, int j) {
  const int n = h.dimension();
  if (j < 1 || j > n) throw DomainError("decompose_yj: coordinate index out of range");
  const int k = h.degree();
  const Rational c = c_const(k, n);
  Polynomial next = Polynomial::variable(n, j) * h.polynomial() -
                    GaussianRational(c) * Polynomial::rho_squared(n) * h.polynomial().partial(j);
  if (!laplacian(next).is_zero() || !next.is_homogeneous(k + 1)) {
    throw InternalConsistencyError("decompose_yj: y_j h - c rho^2 d_j h is not harmonic");
  }
  return {HarmonicPolynomial(std::move(next), k + 1), c};
}

std::vector<GaussianRational> harmonic_coordinates(const HarmonicPolynomial& h) {
  const auto basis = harmonic_basis(h.dimension(), h.degree());
  // Each basis element is monic in a free monomial that no other element
  // touches, so the coordinate is read off from that coefficient.
  std::vector<GaussianRational> coords;
  Polynomial rebuilt(h.dimension());
  for (const auto& b : basis) {
    const GaussianRational c = h.polynomial().coefficient(b.polynomial().leading_exponents());
    coords.push_back(c);
    rebuilt += c * b.polynomial();
  }
  if (!(rebuilt == h.polynomial())) throw DomainError("harmonic_coordinates: polynomial not in span");
  return coords;
}

}  // namespace sw
