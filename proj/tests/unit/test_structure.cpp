#include <set>

#include "doctest.h"
#include "singular_weyl/errors.hpp"
#include "singular_weyl/structure.hpp"

using namespace sw;

TEST_CASE("decompose flags follow q against n") {
  const auto d = decompose(ParameterSet::schrodinger(3, 3), 75);
  REQUIRE(d.size() == 3);
  CHECK(d[0].l == 5);
  CHECK(d[0].k == 2);
  CHECK(d[0].boundary == 2 * 2 + 4 * 5 + 3);
  for (const auto& x : d) {
    CHECK(x.has_lowest);
    CHECK_FALSE(x.has_highest);
    CHECK_FALSE(x.irreducible);
    CHECK(x.chain == std::vector<std::string>{"0", "H^+_{l,k}", "H_{l,k}"});
  }
  CHECK(decompose(ParameterSet::schrodinger(3, 1), 75)[0].has_highest);
  CHECK(decompose(ParameterSet::schrodinger(3, 0), 75)[0].irreducible);
  const auto both = decompose(ParameterSet::heat(2, 2), 4);
  REQUIRE_FALSE(both.empty());
  CHECK(both[0].has_lowest);
  CHECK(both[0].has_highest);
  CHECK(both[0].chain.size() == 4);
  CHECK_THROWS_AS(decompose(ParameterSet::heat(3, 0), 4), AdmissibilityError);
}

TEST_CASE("composition series cases") {
  for (int n = 1; n <= 4; ++n) {
    for (int q = 0; q < 4; ++q) {
      const auto c = composition_series(ParameterSet::schrodinger(n, q));
      const bool plus = (q - n) % 4 == 0;
      const bool minus = (q + n) % 4 == 0;
      const int expected = plus && minus ? 4 : plus ? 2 : minus ? 3 : 1;
      CAPTURE(n);
      CAPTURE(q);
      CHECK(c.case_tag == expected);
      CHECK(c.layers.front() == "0");
      CHECK(c.layers.back() == "H");
      CHECK(c.note.empty() == (expected != 1));
    }
  }
  CHECK(to_text(composition_series(ParameterSet::heat(3, 3))) == "case (2)\n0 ⊂ H0^+ ⊂ H0 ⊂ H0 ⊕ H^+ ⊂ H\n");
  CHECK(to_text(composition_series(ParameterSet::heat(2, 2))) ==
        "case (4)\n0 ⊂ H0^- ⊂ H0^+ ⊕ H0^- ⊂ H0 ⊂ H0 ⊕ H^- ⊂ H0 ⊕ H^- ⊕ H^+ ⊂ H\n");
}

TEST_CASE("heisenberg targets") {
  const auto t = heisenberg_targets(3, 3, 9);
  CHECK(t == std::vector<HeisenbergTarget>{{2, 10, 50}, {4, 8, 100}, {3, 10, 81}, {3, 8, 69}});
  const auto low = heisenberg_targets(3, 1, 0);
  CHECK(std::find(low.begin(), low.end(), HeisenbergTarget{0, 1, 0}) != low.end());
  for (const auto& x : low) CHECK(x.k >= 0);
  CHECK_THROWS_AS(heisenberg_targets(3, -1, 0), DomainError);
}

TEST_CASE("weight types") {
  CHECK(weight_type(3, {9, 1, 1}) == WeightType::lowest);
  CHECK(weight_type(3, {-9, 1, 1}) == WeightType::highest);
  CHECK(weight_type(3, {5, 1, 1}) == WeightType::generic);
  CHECK(to_string(WeightType::lowest) == "lowest");
}

TEST_CASE("lattice graph at lambda 75") {
  LadderGraphOptions opts;
  opts.lambda_only = 75;
  opts.lambda_max = 75;
  opts.include_lambda_zero = false;
  opts.m_min = -20;
  opts.m_max = 20;
  opts.e_plus_edges = opts.e_minus_edges = false;
  const auto g = ladder_graph(ParameterSet::schrodinger(3, 3), opts);
  std::set<std::pair<int, int>> pairs;
  for (const auto& node : g.nodes) {
    pairs.insert({node.index.l, node.index.k});
    CHECK(node.lambda == 75);
    CHECK((node.index.m - 2 * node.index.k - 3) % 4 == 0);
  }
  CHECK(pairs == std::set<std::pair<int, int>>{{5, 2}, {3, 9}, {1, 36}});
  CHECK(g.contains({-1, 5, 2}));
  for (const auto& e : g.edges) {
    CHECK((e.label == "eta+" || e.label == "eta-"));
    CHECK(e.to.m - e.from.m == (e.label == "eta+" ? 4 : -4));
  }
  const auto json = to_json(g);
  CHECK(json["nodes"].size() == g.nodes.size());
  CHECK(to_dot(g).rfind("digraph", 0) == 0);
}

TEST_CASE("level curves csv") {
  const auto csv = level_curves_csv(3, 20);
  CHECK(csv.rfind("lambda,l,k,integral\n", 0) == 0);
  CHECK(csv.find("\n3,1,0,1\n") != std::string::npos);
}
