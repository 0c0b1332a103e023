#include "singular_weyl/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "singular_weyl/errors.hpp"
#include "singular_weyl/harmonic.hpp"

namespace sw {

namespace {

bool congruent(std::int64_t a, std::int64_t b) { return mod_floor(a - b, 4) == 0; }

std::string index_label(const KTypeIndex& i) {
  return "(" + std::to_string(i.m) + "," + std::to_string(i.l) + "," + std::to_string(i.k) + ")";
}

nlohmann::ordered_json index_json(const KTypeIndex& i) { return {{"m", i.m}, {"l", i.l}, {"k", i.k}}; }

}  // namespace

std::vector<SubmoduleDescriptor> decompose(const ParameterSet& params, std::int64_t lambda) {
  const int n = params.n();
  const int q = params.q();
  std::vector<SubmoduleDescriptor> out;
  for (const auto& p : ktype_pairs(n, lambda)) {
    SubmoduleDescriptor d;
    d.l = p.l;
    d.k = p.k;
    d.lambda = lambda;
    d.residue = weight_residue(params, p.k);
    d.boundary = 2 * p.k + 4 * p.l + n;
    d.has_lowest = congruent(q, n);
    d.has_highest = congruent(q, -n);
    d.irreducible = !d.has_lowest && !d.has_highest;
    if (d.has_lowest && d.has_highest) {
      d.chain = {"0", "H^+_{l,k}", "H^+_{l,k} ⊕ H^-_{l,k}", "H_{l,k}"};
    } else if (d.has_lowest) {
      d.chain = {"0", "H^+_{l,k}", "H_{l,k}"};
    } else if (d.has_highest) {
      d.chain = {"0", "H^-_{l,k}", "H_{l,k}"};
    } else {
      d.chain = {"0", "H_{l,k}"};
    }
    out.push_back(std::move(d));
  }
  return out;
}

CompositionSeries composition_series(const ParameterSet& params) {
  const bool plus = congruent(params.q(), params.n());
  const bool minus = congruent(params.q(), -params.n());
  CompositionSeries c;
  if (plus && minus) {
    c.case_tag = 4;
    c.layers = {"0", "H0^-", "H0^+ ⊕ H0^-", "H0", "H0 ⊕ H^-", "H0 ⊕ H^- ⊕ H^+", "H"};
  } else if (plus) {
    c.case_tag = 2;
    c.layers = {"0", "H0^+", "H0", "H0 ⊕ H^+", "H"};
  } else if (minus) {
    c.case_tag = 3;
    c.layers = {"0", "H0^-", "H0", "H0 ⊕ H^-", "H"};
  } else {
    c.case_tag = 1;
    c.layers = {"0", "H0", "H"};
    c.note = "H0 is the unique irreducible submodule of H";
  }
  return c;
}

std::string to_text(const CompositionSeries& series) {
  std::string out = "case (" + std::to_string(series.case_tag) + ")\n";
  for (std::size_t i = 0; i < series.layers.size(); ++i) {
    if (i > 0) out += " ⊂ ";
    out += series.layers[i];
  }
  out += "\n";
  if (!series.note.empty()) out += series.note + "\n";
  return out;
}

std::vector<HeisenbergTarget> heisenberg_targets(int n, std::int64_t l, std::int64_t k) {
  if (l < 0) throw DomainError("heisenberg_targets: l must be >= 0");
  if (!harmonic_degree_valid(n, k) || k < 0) throw DomainError("heisenberg_targets: invalid k for n");
  std::vector<HeisenbergTarget> out;
  const std::int64_t candidates[4][2] = {{l - 1, k + 1}, {l + 1, k - 1}, {l, k + 1}, {l, k - 1}};
  for (const auto& c : candidates) {
    if (c[0] < 0 || c[1] < 0 || !harmonic_degree_valid(n, c[1])) continue;
    out.push_back({c[0], c[1], ktype_eigenvalue(n, c[0], c[1])});
  }
  return out;
}

std::string to_string(WeightType w) {
  switch (w) {
    case WeightType::generic: return "generic";
    case WeightType::lowest: return "lowest";
    case WeightType::highest: return "highest";
  }
  return "?";
}

WeightType weight_type(int n, const KTypeIndex& index) {
  const int boundary = 2 * index.k + 4 * index.l + n;
  if (index.m == boundary) return WeightType::lowest;
  if (index.m == -boundary) return WeightType::highest;
  return WeightType::generic;
}

bool LadderGraph::contains(const KTypeIndex& index) const {
  return std::any_of(nodes.begin(), nodes.end(), [&](const LadderNode& v) { return v.index == index; });
}

LadderGraph ladder_graph(const ParameterSet& params, const LadderGraphOptions& options) {
  const int n = params.n();
  if (options.m_min > options.m_max) throw DomainError("ladder_graph: empty m range");
  LadderGraph g;
  g.params = params;

  // (l,k) pairs with their eigenvalues, λ = 0 family first.
  std::vector<std::pair<LkPair, std::int64_t>> pairs;
  if (options.include_lambda_zero && (!options.lambda_only || *options.lambda_only == 0)) {
    for (int k = 0; k <= options.lambda_zero_k_max; ++k) {
      if (harmonic_degree_valid(n, k)) pairs.push_back({{0, k}, 0});
    }
  }
  std::vector<std::int64_t> lambdas;
  if (options.lambda_only) {
    if (*options.lambda_only != 0) lambdas.push_back(*options.lambda_only);
  } else {
    lambdas = enumerate_admissible(n, options.lambda_max);
  }
  for (auto lambda : lambdas) {
    for (const auto& p : ktype_pairs(n, lambda)) {
      if (p.k >= 0) pairs.push_back({p, lambda});
    }
  }

  std::map<LkPair, HarmonicPolynomial> harmonics;
  for (const auto& [p, lambda] : pairs) {
    harmonics.emplace(p, representative_harmonic(n, static_cast<int>(p.k)));
    for (int m = options.m_min; m <= options.m_max; ++m) {
      if (!congruent(m, 2 * p.k + params.q())) continue;
      const KTypeIndex idx{m, static_cast<int>(p.l), static_cast<int>(p.k)};
      g.nodes.push_back({idx, lambda, weight_type(n, idx)});
    }
  }
  std::set<KTypeIndex> node_set;
  for (const auto& v : g.nodes) node_set.insert(v.index);

  for (const auto& v : g.nodes) {
    const auto& h = harmonics.at({v.index.l, v.index.k});
    const KTypeVector F = make_ktype(params, v.index.m, v.index.l, v.index.k, h);
    if (options.eta_edges) {
      for (int sign : {1, -1}) {
        const auto image = apply_eta(F, sign);
        if (image.empty()) continue;
        const auto& t = image.terms().front();
        const int numerator = (sign > 0 ? v.index.m : -v.index.m) + 4 * v.index.l + 2 * v.index.k + n;
        LadderEdge e{v.index, t.vector.index(), sign > 0 ? "eta+" : "eta-",
                     to_string(Rational(-numerator, 4)), t.coefficient, v.lambda, false};
        e.dangling = node_set.count(e.to) == 0;
        g.edges.push_back(std::move(e));
      }
    }
    for (int sign : {1, -1}) {
      if ((sign > 0 && !options.e_plus_edges) || (sign < 0 && !options.e_minus_edges)) continue;
      for (int j : options.e_coordinates) {
        if (j < 1 || j > n) continue;
        const auto directions = ladder_directions(F, j, sign);
        const auto coeffs = ladder_coefficients(n, F.index(), sign);
        for (std::size_t i = 0; i < directions.size(); ++i) {
          if (!directions[i] || coeffs[i].value == 0) continue;
          LadderEdge e{v.index,
                       directions[i]->index(),
                       "E" + std::to_string(j) + (sign > 0 ? "+" : "-"),
                       to_string(coeffs[i]),
                       coeffs[i].evaluate(params.s()),
                       directions[i]->lambda().value(),
                       false};
          e.dangling = node_set.count(e.to) == 0;
          g.edges.push_back(std::move(e));
        }
      }
    }
  }
  return g;
}

nlohmann::ordered_json to_json(const LadderGraph& g) {
  using json = nlohmann::ordered_json;
  json j;
  j["n"] = g.params.n();
  j["q"] = g.params.q();
  j["s"] = complex_json(g.params.s());
  json nodes = json::array();
  for (const auto& v : g.nodes) {
    json node = index_json(v.index);
    node["lambda"] = v.lambda;
    node["weight"] = to_string(v.weight);
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", index_json(e.from)},
                     {"to", index_json(e.to)},
                     {"label", e.label},
                     {"coefficient", e.exact},
                     {"value", complex_json(e.value)},
                     {"lambda_to", e.lambda_to},
                     {"dangling", e.dangling}});
  }
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

std::string to_dot(const LadderGraph& g) {
  std::ostringstream out;
  out << "digraph ladder {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& v : g.nodes) {
    out << "  \"" << index_label(v.index) << "\" [label=\"m=" << v.index.m << " l=" << v.index.l
        << " k=" << v.index.k << "\\nlambda=" << v.lambda << "\"";
    if (v.weight != WeightType::generic) out << ", style=bold";
    out << "];\n";
  }
  std::set<KTypeIndex> dangling_targets;
  for (const auto& e : g.edges) {
    if (e.dangling) dangling_targets.insert(e.to);
  }
  for (const auto& t : dangling_targets) {
    out << "  \"" << index_label(t) << "\" [style=dashed, label=\"" << index_label(t) << "\\n(truncated)\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << index_label(e.from) << "\" -> \"" << index_label(e.to) << "\" [label=\"" << e.label << ": "
        << e.exact << "\"";
    if (e.dangling) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string level_curves_csv(int n, std::int64_t lambda_max, double step) {
  if (step <= 0.0) throw DomainError("level_curves_csv: step must be positive");
  std::ostringstream out;
  out.precision(10);
  out << "lambda,l,k,integral\n";
  for (auto lambda : enumerate_admissible(n, lambda_max)) {
    for (int i = 1;; ++i) {
      const double l = i * step;
      const double k = static_cast<double>(lambda) / (2.0 * l) - l + 1.0 - n / 2.0;
      if (k < -1e-12) break;
      // Integral points are the λ-admissible pairs.
      const double lr = std::round(l);
      const bool integral = std::abs(l - lr) < 1e-9 && lr >= 1 && std::abs(k - std::round(k)) < 1e-9;
      out << lambda << "," << l << "," << (std::abs(k) < 1e-12 ? 0.0 : k) << "," << (integral ? 1 : 0) << "\n";
    }
  }
  return out.str();
}

nlohmann::ordered_json to_json(const SubmoduleDescriptor& d) {
  return {{"l", d.l},
          {"k", d.k},
          {"lambda", d.lambda},
          {"residue", d.residue},
          {"boundary", d.boundary},
          {"has_lowest", d.has_lowest},
          {"has_highest", d.has_highest},
          {"irreducible", d.irreducible},
          {"chain", d.chain}};
}

nlohmann::ordered_json to_json(const CompositionSeries& c) {
  nlohmann::ordered_json j{{"case", c.case_tag}, {"layers", c.layers}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace sw
