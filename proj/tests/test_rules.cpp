#include "doctest.h"

#include <sstream>

#include "pseudoreal/extension.hpp"
#include "pseudoreal/rules.hpp"

using namespace pseudoreal;

namespace {

NecGeneratingVector make_vec(const Group& g, std::vector<Elt> conf, NecSignature sig,
                             std::vector<Elt> glides, std::vector<Elt> ell) {
  NecGeneratingVector v;
  v.full_group = &g;
  v.conformal = std::move(conf);
  v.signature = std::move(sig);
  v.glides = std::move(glides);
  v.elliptic = std::move(ell);
  REQUIRE_FALSE(validate_vector(v).has_value());
  return v;
}

}  // namespace

TEST_CASE("rule fixture parses and round-trips the builtin data") {
  RuleSet rules = builtin_rules();
  CHECK(rules.rules.size() == 4);
  CHECK(rules.rule_for(NonMaximalKind::FREE).conj.size() == 3);
  CHECK(rules.rule_for(NonMaximalKind::KL).index == 2);
  CHECK(rules.rule_for(NonMaximalKind::KK).index == 4);
  CHECK(rules.rule_for(NonMaximalKind::K).test == ContainmentRule::Test::Assembly);

  std::istringstream bad("RULE kind=XX index=2\n");
  CHECK_THROWS(parse_rules(bad));
}

TEST_CASE("FREE rule always rejects abelian full groups") {
  // glide triples in C4 x C2 over C2 x C2 would need squares multiplying to
  // the identity; build one in C2^4 over C2^3 instead (split, but the rule
  // itself is the thing under test)
  // C2 x C2 over C2: the smallest full group with a (3;-;[-]) action
  Group g = make_abelian({2, 2});
  Elt a = g.generators()[0], b = g.generators()[1];
  Subgroup conf = closure(g, {b});
  std::vector<Elt> glides{a, a, g.mul(a, b)};
  auto v = make_vec(g, conf.members, make_nec(3, {}), glides, {});
  RuleSet rules = builtin_rules();
  CHECK_FALSE(apply_rule(rules.rule_for(NonMaximalKind::FREE), v));  // extends
}

TEST_CASE("KL rule: the published F20 witness survives, C16 dies") {
  RuleSet rules = builtin_rules();
  const auto& kl = rules.rule_for(NonMaximalKind::KL);

  // F20 = <a,b | a^5, b^4, b a b^-1 = a^2>, conformal D5 = <a, b^2>
  Group f20 = make_metacyclic(5, 4, 2, 0);
  Elt a = f20.generators()[0], b = f20.generators()[1];
  Subgroup d5 = closure(f20, {a, f20.mul(b, b)});
  REQUIRE(d5.order() == 10);
  auto vecs = nec_vectors(f20, d5, make_nec(1, {2, 5}), SearchMode::All);
  REQUIRE(!vecs.empty());
  bool some_survive = false;
  for (const auto& v : vecs)
    if (apply_rule(kl, v)) some_survive = true;
  CHECK(some_survive);  // the genus-4 table row exists

  // C16 over C8 with (1;-;[2,8]) all extend (inversion), so no row
  Group c16 = make_cyclic(16);
  Subgroup c8 = closure(c16, {2});
  auto dead = nec_vectors(c16, c8, make_nec(1, {2, 8}), SearchMode::All);
  REQUIRE(!dead.empty());
  for (const auto& v : dead) CHECK_FALSE(apply_rule(kl, v));
}

TEST_CASE("KK rule kills the abelian candidates of genus 5") {
  RuleSet rules = builtin_rules();
  const auto& kk = rules.rule_for(NonMaximalKind::KK);
  Group g = make_abelian({4, 4});
  Elt a = g.generators()[0], b = g.generators()[1];
  Subgroup conf = closure(g, {a, g.mul(b, b)});  // C4 x C2
  REQUIRE(conf.order() == 8);
  auto vecs = nec_vectors(g, conf, make_nec(1, {4, 4}), SearchMode::All);
  REQUIRE(!vecs.empty());
  for (const auto& v : vecs) CHECK_FALSE(apply_rule(kk, v));
}

TEST_CASE("K rule: the genus-5 C12 row survives") {
  RuleSet rules = builtin_rules();
  const auto& k = rules.rule_for(NonMaximalKind::K);
  Group c12 = make_cyclic(12);
  Subgroup c6 = closure(c12, {2});
  auto vecs = nec_vectors(c12, c6, make_nec(2, {3}), SearchMode::All);
  REQUIRE(!vecs.empty());
  bool some_survive = false;
  for (const auto& v : vecs)
    if (apply_rule(k, v)) some_survive = true;
  CHECK(some_survive);
}

TEST_CASE("K rule: C16 over C8 dies in both period parities") {
  RuleSet rules = builtin_rules();
  const auto& k = rules.rule_for(NonMaximalKind::K);
  Group c16 = make_cyclic(16);
  Subgroup c8 = closure(c16, {2});
  for (int period : {2, 4}) {
    auto vecs = nec_vectors(c16, c8, make_nec(2, {period}), SearchMode::All);
    REQUIRE(!vecs.empty());
    for (const auto& v : vecs) CHECK_FALSE(apply_rule(k, v));
  }
}

TEST_CASE("kind mismatch is rejected") {
  Group c12 = make_cyclic(12);
  Subgroup c6 = closure(c12, {2});
  auto vecs = nec_vectors(c12, c6, make_nec(2, {3}), SearchMode::First);
  REQUIRE(!vecs.empty());
  RuleSet rules = builtin_rules();
  CHECK_THROWS_AS(apply_rule(rules.rule_for(NonMaximalKind::KL), vecs[0]), GroupError);
}

TEST_CASE("regression: the defective table rows stay defective") {
  // 1. No non-split degree-2 extension of C4xC2 admits a (3;-;[-]) action:
  //    the squares of the outside coset never multiply to the identity.
  Group g = make_abelian({4, 2});
  int with_vectors = 0;
  for (const auto& cls : nonsplit_extensions(g)) {
    Subgroup conf = make_subgroup(*cls.extension, cls.embedding.images);
    with_vectors += nec_vectors(*cls.extension, conf, make_nec(3, {}), SearchMode::First).size();
  }
  CHECK(with_vectors == 0);

  // 2. Every (3;-;[-]) witness of the semidihedral group over D4 satisfies
  //    the glide-rewriting automorphism condition, so the action extends.
  Group sd16 = make_semidihedral(8);
  Elt a = sd16.generators()[0], x = sd16.generators()[1];
  Subgroup d4 = closure(sd16, {sd16.mul(a, a), x});
  REQUIRE(d4.order() == 8);
  auto vecs = nec_vectors(sd16, d4, make_nec(3, {}), SearchMode::All);
  REQUIRE(!vecs.empty());
  RuleSet rules = builtin_rules();
  const auto& fr = rules.rule_for(NonMaximalKind::FREE);
  for (const auto& v : vecs) CHECK_FALSE(apply_rule(fr, v));

  // 3. Every (2;-;[2]) witness over the modular group of order 16 has the
  //    involutive extension twist, exactly like the candidates the published
  //    table excludes.
  Group m42 = make_modular(8);
  const auto& k = rules.rule_for(NonMaximalKind::K);
  for (const auto& cls : nonsplit_extensions(m42)) {
    Subgroup conf = make_subgroup(*cls.extension, cls.embedding.images);
    for (const auto& v : nec_vectors(*cls.extension, conf, make_nec(2, {2}), SearchMode::All))
      CHECK_FALSE(apply_rule(k, v));
  }
}
