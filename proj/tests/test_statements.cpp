#include <doctest.h>

#include <random>
#include <variant>

#include "qsem/errors.hpp"
#include "qsem/scenarios.hpp"
#include "qsem/statements.hpp"
#include "test_support.hpp"

using namespace qsem;
using namespace qsem::test;

namespace {

FormulaPtr parsed(std::string_view text) {
  return std::get<FormulaPtr>(parse(text));
}

StatementEncoding expect_exists(EncodingResult r) {
  REQUIRE(std::holds_alternative<StatementEncoding>(r));
  return std::get<StatementEncoding>(std::move(r));
}

constexpr const char* kCoinJson = R"({
  "dimension": 2,
  "atoms": [
    {"name": "H", "vector": [[1.0, 0.0], [0.0, 0.0]]},
    {"name": "T", "vector": [[0.0, 0.0], [1.0, 0.0]]},
    {"name": "R", "vector": [[0.7071067811865476, 0.0],
                             [0.7071067811865476, 0.0]]}
  ],
  "states": [
    {"name": "heads_up", "amplitudes": [[1.0, 0.0], [0.0, 0.0]]},
    {"name": "tails_up", "amplitudes": [[0.0, 0.0], [1.0, 0.0]]},
    {"name": "superposed", "amplitudes": [[0.7071067811865476, 0.0],
                                          [0.7071067811865476, 0.0]]}
  ]
})";

}  // namespace

TEST_CASE("registering the coin scenario") {
  const ScenarioSpec spec = register_scenario(kCoinJson);
  CHECK(spec.dim() == 2);
  CHECK(spec.atom_names() == std::vector<std::string>{"H", "R", "T"});
  CHECK(spec.state_names() ==
        std::vector<std::string>{"heads_up", "superposed", "tails_up"});
  CHECK(frob_distance(spec.atom("H").matrix(), matrix2(1, 0, 0, 0)) < 1e-12);
  CHECK(frob_distance(spec.atom("R").matrix(),
                      matrix2(0.5, 0.5, 0.5, 0.5)) < 1e-12);
  CHECK(spec.state("superposed").is_normalized());
}

TEST_CASE("matrix atoms are accepted when they are projectors") {
  const ScenarioSpec spec = register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "matrix": [[[0.5,0],[0.5,0]],
                                       [[0.5,0],[0.5,0]]]}],
    "states": []
  })");
  CHECK(frob_distance(spec.atom("P").matrix(),
                      matrix2(0.5, 0.5, 0.5, 0.5)) < 1e-12);
}

TEST_CASE("scenario load rejects invariant violations") {
  // Non-Hermitian "projector".
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "matrix": [[[0,0],[1,0]], [[0,0],[0,0]]]}]
  })"),
                  ScenarioError);
  // Hermitian but not idempotent.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "matrix": [[[0.5,0],[0,0]], [[0,0],[0.5,0]]]}]
  })"),
                  ScenarioError);
  // State of norm 2.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "states": [{"name": "s", "amplitudes": [[2,0],[0,0]]}]
  })"),
                  ScenarioError);
  // Duplicate atom name.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "vector": [[1,0],[0,0]]},
              {"name": "P", "vector": [[0,0],[1,0]]}]
  })"),
                  ScenarioError);
  // Dimension mismatch.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 3,
    "atoms": [{"name": "P", "vector": [[1,0],[0,0]]}]
  })"),
                  ScenarioError);
  // Zero vector atom.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "vector": [[0,0],[0,0]]}]
  })"),
                  ScenarioError);
  // Malformed complex entry.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "P", "vector": [[1],[0,0]]}]
  })"),
                  ScenarioError);
  // Invalid identifier.
  CHECK_THROWS_AS(register_scenario(R"({
    "dimension": 2,
    "atoms": [{"name": "2P", "vector": [[1,0],[0,0]]}]
  })"),
                  ScenarioError);
  // Not JSON at all.
  CHECK_THROWS_AS(register_scenario("not json"), ScenarioError);
}

TEST_CASE("pairwise commutation on the coin") {
  const ScenarioSpec coin = coin_fixture();
  CHECK(pairwise_commuting(*parsed("H & T"), coin));
  CHECK_FALSE(pairwise_commuting(*parsed("R & H"), coin));
  CHECK(pairwise_commuting(*parsed("H"), coin));
  CHECK(pairwise_commuting(*parsed("H & H"), coin));
  CHECK_FALSE(pairwise_commuting(*parsed("!R | (H & T)"), coin));
  CHECK_THROWS_AS(pairwise_commuting(*parsed("H & X"), coin), EvalError);
}

TEST_CASE("encoding the coin conjunction and disjunction") {
  const ScenarioSpec coin = coin_fixture();

  const auto conj = expect_exists(encode(*parsed("H & T"), coin));
  CHECK(conj.synonym.rank() == 0);
  CHECK(conj.antonym.rank() == 2);
  CHECK(frob_distance(conj.projector.matrix(), CMatrix::zero(2)) < 1e-12);

  const auto disj = expect_exists(encode(*parsed("H | T"), coin));
  CHECK(disj.synonym.rank() == 2);
  CHECK(disj.antonym.rank() == 0);
  CHECK(frob_distance(disj.projector.matrix(), CMatrix::identity(2)) <
        1e-12);
}

TEST_CASE("encoding fails for incompatible atoms, naming the pair") {
  const ScenarioSpec coin = coin_fixture();
  const EncodingResult r = encode(*parsed("R & H"), coin);
  REQUIRE(std::holds_alternative<EncodingNonexistent>(r));
  const std::string& reason = std::get<EncodingNonexistent>(r).reason;
  CHECK(reason.find("R") != std::string::npos);
  CHECK(reason.find("H") != std::string::npos);
}

TEST_CASE("implication encodes as the negated-antecedent disjunction") {
  const ScenarioSpec coin = coin_fixture();
  const auto imp = expect_exists(encode(*parsed("H -> T"), coin));
  CHECK(imp.synonym.rank() == 1);
  CHECK(contains(imp.synonym, ket2(0, 1)));
  CHECK(contains(imp.antonym, ket2(1, 0)));
}

TEST_CASE("synonym and antonym projectors sum to the identity") {
  const ScenarioSpec coin = coin_fixture();
  for (const char* text : {"H", "T", "R", "!H", "H & T", "H | T", "H -> T",
                           "!(H | T)", "H -> (T -> H)"}) {
    const auto e = expect_exists(encode(*parsed(text), coin));
    CHECK(frob_distance(e.synonym.projector().matrix() +
                            e.antonym.projector().matrix(),
                        CMatrix::identity(2)) < 1e-9);
  }
}

TEST_CASE("encoding laws over random commuting families") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + trial % 5;
    const DiagonalFamily family = random_diagonal_family(rng, dim, 3);
    const auto formula = [&](int depth) {
      return random_formula(rng, family.atom_names, depth);
    };
    for (int rep = 0; rep < 5; ++rep) {
      const FormulaPtr f = formula(2);
      const FormulaPtr g = formula(2);
      const auto ef = expect_exists(encode(*f, family.spec));
      const auto eg = expect_exists(encode(*g, family.spec));

      // Double negation preserves the synonym.
      const auto enn = expect_exists(
          encode(*Formula::negation(Formula::negation(f)), family.spec));
      CHECK(frob_distance(enn.projector.matrix(), ef.projector.matrix()) <
            1e-9);

      // Conjunction shrinks, disjunction grows.
      const auto eand =
          expect_exists(encode(*Formula::conjunction(f, g), family.spec));
      for (const Ket& q : eand.synonym.basis()) {
        CHECK(contains(ef.synonym, q));
      }
      const auto eor =
          expect_exists(encode(*Formula::disjunction(f, g), family.spec));
      for (const Ket& q : ef.synonym.basis()) {
        CHECK(contains(eor.synonym, q));
      }

      // De Morgan at the subspace level.
      const auto lhs = expect_exists(encode(
          *Formula::negation(Formula::conjunction(f, g)), family.spec));
      const auto rhs = expect_exists(
          encode(*Formula::disjunction(Formula::negation(f),
                                       Formula::negation(g)),
                 family.spec));
      CHECK(frob_distance(lhs.projector.matrix(), rhs.projector.matrix()) <
            1e-9);
    }
  }
}
