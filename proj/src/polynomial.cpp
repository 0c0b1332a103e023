#include "singular_weyl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "singular_weyl/errors.hpp"

namespace sw {

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const GaussianRational& g) {
  if (g.im == 0) return to_string(g.re);
  if (g.re == 0) return to_string(g.im) + "i";
  const bool negative_im = g.im < 0;
  return to_string(g.re) + (negative_im ? "-" : "+") + to_string(negative_im ? Rational(-g.im) : g.im) +
         "i";
}

Rational best_rational_approximation(double x, std::int64_t max_denominator) {
  if (max_denominator < 1) max_denominator = 1;
  if (!std::isfinite(x)) throw DomainError("best_rational_approximation: non-finite input");
  const bool negative = x < 0;
  double rest = std::abs(x);
  // Convergents h/k of the continued fraction, plus the best semiconvergent
  // at the cut-off.
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  double frac = rest;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(frac);
    if (a_d > 9.0e15) break;
    const BigInt a = static_cast<std::int64_t>(a_d);
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // Largest t with t*k + k_prev <= max_denominator gives the semiconvergent.
      const BigInt t = (BigInt(max_denominator) - k_prev) / k;
      const BigInt hs = t * h + h_prev;
      const BigInt ks = t * k + k_prev;
      const double conv_err = std::abs(rest - (h.convert_to<double>() / k.convert_to<double>()));
      const double semi_err = std::abs(rest - (hs.convert_to<double>() / ks.convert_to<double>()));
      if (ks > 0 && semi_err < conv_err) {
        h = hs;
        k = ks;
      }
      break;
    }
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    const double remainder = frac - a_d;
    if (remainder < 1e-15) break;
    frac = 1.0 / remainder;
  }
  Rational result(h, k);
  return negative ? Rational(-result) : result;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) throw DomainError("polynomial dimension must be >= 1");
}

Polynomial::Polynomial(int n, Terms terms) : Polynomial(n) {
  for (auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::constant(int n, GaussianRational c) {
  return monomial(n, Exponents(static_cast<std::size_t>(n), 0), std::move(c));
}

Polynomial Polynomial::monomial(int n, Exponents e, GaussianRational c) {
  if (static_cast<int>(e.size()) != n) throw DomainError("monomial: exponent length mismatch");
  Polynomial p(n);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int n, int j) {
  if (j < 1 || j > n) throw DomainError("variable index out of range");
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  return monomial(n, e);
}

Polynomial Polynomial::rho_squared(int n) {
  Polynomial p(n);
  for (int j = 0; j < n; ++j) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 2;
    p.add_term(e, GaussianRational(1));
  }
  return p;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (static_cast<int>(e.size()) != n_) throw DomainError("polynomial: exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == degree;
  });
}

bool Polynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

GaussianRational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw DomainError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw DomainError("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw DomainError("polynomial dimension mismatch");
  Polynomial out(a.n_);
  Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial result = constant(n_, GaussianRational(1));
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::partial(int j) const {
  if (j < 1 || j > n_) throw DomainError("partial: variable index out of range");
  const auto idx = static_cast<std::size_t>(j - 1);
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    out.add_term(d, c * GaussianRational(e[idx]));
  }
  return out;
}

std::complex<double> Polynomial::evaluate(std::span<const double> y) const {
  return NumericPolynomial(*this)(y);
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out += p.partial(j).partial(j);
  return out;
}

Polynomial euler(const Polynomial& p) {
  Polynomial out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out += Polynomial::variable(p.dimension(), j) * p.partial(j);
  return out;
}

NumericPolynomial::NumericPolynomial(const Polynomial& p) : n_(p.dimension()) {
  for (const auto& [e, c] : p.terms()) {
    exponents_.insert(exponents_.end(), e.begin(), e.end());
    re_.push_back(c.re.convert_to<long double>());
    im_.push_back(c.im.convert_to<long double>());
    for (int x : e) max_exponent_ = std::max(max_exponent_, x);
  }
}

std::complex<double> NumericPolynomial::operator()(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != n_) throw DomainError("polynomial evaluated at wrong dimension");
  // High-degree harmonics cancel heavily in the monomial basis, so the sum
  // runs in extended precision from a table of powers.
  const std::size_t stride = static_cast<std::size_t>(max_exponent_) + 1;
  std::vector<long double> powers(static_cast<std::size_t>(n_) * stride);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    long double v = 1.0L;
    for (std::size_t p = 0; p < stride; ++p) {
      powers[i * stride + p] = v;
      v *= static_cast<long double>(y[i]);
    }
  }
  long double sr = 0.0L, si = 0.0L;
  for (std::size_t t = 0; t < re_.size(); ++t) {
    const int* e = exponents_.data() + t * static_cast<std::size_t>(n_);
    long double mono = 1.0L;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) mono *= powers[i * stride + static_cast<std::size_t>(e[i])];
    sr += re_[t] * mono;
    si += im_[t] * mono;
  }
  return {static_cast<double>(sr), static_cast<double>(si)};
}

namespace {

void monomials_rec(int n, int remaining, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    monomials_rec(n, remaining - e, pos + 1, cur, out);
  }
}

nlohmann::ordered_json rational_json(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const auto as_json = [](const BigInt& v) -> nlohmann::ordered_json {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      return v.convert_to<std::int64_t>();
    }
    return v.str();
  };
  return nlohmann::ordered_json::array({as_json(num), as_json(den)});
}

Rational rational_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("rational must be [num, den]");
  const auto big = [](const nlohmann::ordered_json& v) -> BigInt {
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw DomainError("rational component must be an integer or decimal string");
  };
  const BigInt den = big(j[1]);
  if (den == 0) throw DomainError("rational with zero denominator");
  return den < 0 ? Rational(-big(j[0]), -den) : Rational(big(j[0]), den);
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int n, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(static_cast<std::size_t>(n), 0);
  monomials_rec(n, degree, 0, cur, out);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

nlohmann::ordered_json to_json(const Polynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["exponents"] = e;
    if (c.is_real()) {
      term["coeff"] = rational_json(c.re);
    } else {
      term["coeff"] = nlohmann::ordered_json::array({rational_json(c.re), rational_json(c.im)});
    }
    arr.push_back(std::move(term));
  }
  return arr;
}

Polynomial polynomial_from_json(int n, const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array of terms");
  Polynomial p(n);
  for (const auto& term : j) {
    const auto e = term.at("exponents").get<Exponents>();
    const auto& coeff = term.at("coeff");
    GaussianRational c;
    if (coeff.size() == 2 && coeff[0].is_array()) {
      c = GaussianRational(rational_from_json(coeff[0]), rational_from_json(coeff[1]));
    } else {
      c = GaussianRational(rational_from_json(coeff));
    }
    p += Polynomial::monomial(n, e, c);
  }
  return p;
}

}  // namespace sw
