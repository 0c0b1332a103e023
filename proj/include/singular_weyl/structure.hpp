#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singular_weyl/operators.hpp"
#include "singular_weyl/params.hpp"

namespace sw {

/// H_{l,k} = span{F_{m,l,k} : m ≡ 2k+q mod 4} described by index arithmetic.
/// H^+_{l,k} (m ≥ 2k+4l+n) exists when q ≡ n mod 4, H^-_{l,k}
/// (m ≤ -(2k+4l+n)) when q ≡ -n mod 4.
struct SubmoduleDescriptor {
  std::int64_t l = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  int residue = 0;             ///< every weight m is ≡ residue mod 4
  std::int64_t boundary = 0;   ///< 2k + 4l + n
  bool has_lowest = false;     ///< q ≡ n mod 4
  bool has_highest = false;    ///< q ≡ -n mod 4
  bool irreducible = false;    ///< neither of the above
  /// Composition series of H_{l,k} as an sl2 × O(n)-module.
  std::vector<std::string> chain;
};

/// One descriptor per λ-admissible pair (K-type indices for n = 1).
std::vector<SubmoduleDescriptor> decompose(const ParameterSet& params, std::int64_t lambda);

struct CompositionSeries {
  int case_tag = 1;  ///< 1..4
  std::vector<std::string> layers;
  std::string note;
};

/// The chain for H = H_0 ⊕ (⊕_λ H_λ) selected by q against ±n mod 4.
CompositionSeries composition_series(const ParameterSet& params);

/// Golden-file text: "case (c)", the chain joined by " ⊂ ", and the note if any.
std::string to_text(const CompositionSeries& series);

struct HeisenbergTarget {
  std::int64_t l = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  friend bool operator==(const HeisenbergTarget&, const HeisenbergTarget&) = default;
};

/// The pairs reachable by E_j^± from (l,k): (l-1,k+1), (l+1,k-1), (l,k+1),
/// (l,k-1), with λ' = l'(2l'+2k'+n-2). Pairs with l' < 0 or a harmonic degree
/// invalid for n (k' < 0 included) are dropped; l' = 0 stays, as the λ = 0 family.
std::vector<HeisenbergTarget> heisenberg_targets(int n, std::int64_t l, std::int64_t k);

enum class WeightType { generic, lowest, highest };
std::string to_string(WeightType w);
WeightType weight_type(int n, const KTypeIndex& index);

struct LadderNode {
  KTypeIndex index;
  std::int64_t lambda = 0;
  WeightType weight = WeightType::generic;
};

struct LadderEdge {
  KTypeIndex from;
  KTypeIndex to;
  std::string label;      ///< "eta+", "eta-", "E1+", ...
  std::string exact;      ///< symbolic coefficient, e.g. "-3" or "-7/2*s"
  Complex value;
  std::int64_t lambda_to = 0;
  bool dangling = false;  ///< target lies outside the truncated node set
};

struct LadderGraphOptions {
  std::int64_t lambda_max = 0;
  int m_min = 0;
  int m_max = 20;
  /// Only this λ (besides the λ = 0 family, when included).
  std::optional<std::int64_t> lambda_only;
  bool include_lambda_zero = true;
  /// Harmonic degrees kept for the (infinite) λ = 0 family.
  int lambda_zero_k_max = 4;
  bool eta_edges = true;
  bool e_plus_edges = true;
  bool e_minus_edges = true;
  std::vector<int> e_coordinates{1};
};

struct LadderGraph {
  ParameterSet params = ParameterSet::schrodinger(1, 0);
  std::vector<LadderNode> nodes;
  std::vector<LadderEdge> edges;

  bool contains(const KTypeIndex& index) const;
};

/// Nodes: every K-type index with admissible λ ≤ lambda_max (or λ =
/// lambda_only), m in [m_min, m_max] and m ≡ 2k+q mod 4, using one
/// representative harmonic per (l,k). Edges: η± with the closed-form
/// coefficients and E_j^± with the shipped table; zero-coefficient edges are
/// omitted and edges leaving the node set are kept with dangling = true.
/// Negative k (n = 2) is not included.
LadderGraph ladder_graph(const ParameterSet& params, const LadderGraphOptions& options);

nlohmann::ordered_json to_json(const LadderGraph& g);
std::string to_dot(const LadderGraph& g);

/// Level curves λ = l(2l+2k+n-2) solved for real k, sampled on l = step,
/// 2 step, ... while k ≥ 0. CSV with header
/// "lambda,l,k,integral".
std::string level_curves_csv(int n, std::int64_t lambda_max, double step = 0.05);

nlohmann::ordered_json to_json(const SubmoduleDescriptor& d);
nlohmann::ordered_json to_json(const CompositionSeries& c);

}  // namespace sw
