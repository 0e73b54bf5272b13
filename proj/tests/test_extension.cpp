#include "doctest.h"
#include "pseudoreal/extension.hpp"

#include <map>

using namespace pseudoreal;

TEST_CASE("pg_set sizes") {
  Group c1 = make_cyclic(1);
  CHECK(pg_set(c1).size() == 1);
  Group c2 = make_cyclic(2);
  CHECK(pg_set(c2).size() == 2);  // (id,e), (id,a)
  // exhaustive scan value for C2xC2: 4 fixed points of id + 2 for each of the
  // three involutions of Aut = S3
  Group v4 = make_abelian({2, 2});
  CHECK(pg_set(v4).size() == 10);
}

TEST_CASE("eg classes of C2") {
  Group c2 = make_cyclic(2);
  auto classes = eg_classes(c2);
  REQUIRE(classes.size() == 2);
  int split = 0, nonsplit = 0;
  for (const auto& c : classes) {
    CHECK(c.extension->order() == 4);
    if (c.split) {
      ++split;
      CHECK(c.direct_product);
      CHECK(is_isomorphic(*c.extension, make_abelian({2, 2})).has_value());
    } else {
      ++nonsplit;
      CHECK(is_isomorphic(*c.extension, make_cyclic(4)).has_value());
    }
  }
  CHECK(split == 1);
  CHECK(nonsplit == 1);
}

TEST_CASE("eg classes of the trivial group") {
  auto classes = eg_classes(make_cyclic(1));
  REQUIRE(classes.size() == 1);
  CHECK(is_isomorphic(*classes[0].extension, make_cyclic(2)).has_value());
}

TEST_CASE("build_extension concrete checks") {
  Group c2 = make_cyclic(2);
  auto data = pg_set(c2);
  // (id, a): the C4 extension with coset rep squaring to a
  for (const auto& d : data) {
    auto built = build_extension(c2, d);
    CHECK(built.group->order() == 4);
    Elt t = built.coset_rep;
    CHECK(built.group->mul(t, t) == built.embedding.images[d.g]);
  }

  Group c4 = make_cyclic(4);
  // (inversion, a^2) builds Q8
  auto auts = automorphisms(c4);
  for (const auto& phi : auts) {
    if (phi.images[1] != 3) continue;  // inversion
    ExtensionDatum d{phi, 2};
    auto built = build_extension(c4, d);
    CHECK(is_isomorphic(*built.group, make_dicyclic(8)).has_value());
  }
}

TEST_CASE("build_extension rejects junk") {
  Group c4 = make_cyclic(4);
  auto auts = automorphisms(c4);
  const GroupMap* inv = nullptr;
  for (const auto& phi : auts)
    if (phi.images[1] == 3) inv = &phi;
  REQUIRE(inv);
  // inversion with g = a: phi(g) != g
  CHECK_THROWS_AS(build_extension(c4, ExtensionDatum{*inv, 1}), GroupError);
}

TEST_CASE("nonsplit extensions of C4 are C8 and Q8") {
  auto ns = nonsplit_extensions(make_cyclic(4));
  REQUIRE(ns.size() == 2);
  bool c8 = false, q8 = false;
  for (const auto& c : ns) {
    if (is_isomorphic(*c.extension, make_cyclic(8))) c8 = true;
    if (is_isomorphic(*c.extension, make_dicyclic(8))) q8 = true;
  }
  CHECK(c8);
  CHECK(q8);
}

TEST_CASE("nonsplit extensions of S3 are empty") {
  CHECK(nonsplit_extensions(make_symmetric(3)).empty());
  CHECK(comp_excluded(make_symmetric(3)));
}

TEST_CASE("comp exclusion") {
  CHECK_FALSE(comp_excluded(make_cyclic(2)));   // center nontrivial
  CHECK_FALSE(comp_excluded(make_dihedral(4)));  // center nontrivial
  CHECK(comp_excluded(make_symmetric(4)));
  // D5 is NOT excluded: every involution of Aut(D5) = F20 lies in Inn, so
  // Inn has no complement and Out = C2 has an involution. D5 really is the
  // conformal group of a pseudoreal surface in genus 4.
  CHECK_FALSE(comp_excluded(make_dihedral(5)));
}

TEST_CASE("round trip: re-extract datum from built extension") {
  for (const Group& g : {make_cyclic(4), make_abelian({2, 2}), make_symmetric(3)}) {
    for (const auto& cls : eg_classes(g)) {
      const Group& ext = *cls.extension;
      Elt x = cls.coset_rep;
      // conjugation by x restricted to the image, and x^2, must land in the
      // same class
      GroupMap phi;
      phi.source = &g;
      phi.target = &g;
      phi.images.resize(g.order());
      for (Elt a = 0; a < g.order(); ++a) {
        Elt img = ext.conj(x, cls.embedding.images[a]);
        // locate preimage
        Elt pre = -1;
        for (Elt b = 0; b < g.order(); ++b)
          if (cls.embedding.images[b] == img) pre = b;
        REQUIRE(pre >= 0);
        phi.images[a] = pre;
      }
      Elt xsq = ext.mul(x, x);
      Elt gpre = -1;
      for (Elt b = 0; b < g.order(); ++b)
        if (cls.embedding.images[b] == xsq) gpre = b;
      REQUIRE(gpre >= 0);
      bool found = false;
      for (const auto& m : cls.members)
        if (m.phi.images == phi.images && m.g == gpre) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("oracle extensions for C2 and C3") {
  Group c2 = make_cyclic(2);
  Group c4 = make_cyclic(4), v4 = make_abelian({2, 2});
  auto entries = oracle_extensions(c2, {&c4, &v4});
  REQUIRE(entries.size() == 2);
  int total = 0;
  for (const auto& e : entries) total += e.embedding_classes;
  CHECK(total == 2);
  CHECK(total == int(eg_classes(c2).size()));

  Group c3 = make_cyclic(3);
  Group c6 = make_cyclic(6), s3 = make_symmetric(3);
  auto e3 = oracle_extensions(c3, {&c6, &s3});
  int total3 = 0;
  for (const auto& e : e3) total3 += e.embedding_classes;
  CHECK(total3 == int(eg_classes(c3).size()));
}

TEST_CASE("oracle matches eg_classes per abstract type for C2xC2") {
  Group g = make_abelian({2, 2});
  Group c8 = make_cyclic(8), c42 = make_abelian({4, 2}), c222 = make_abelian({2, 2, 2});
  Group d4 = make_dihedral(4), q8 = make_dicyclic(8);
  auto entries = oracle_extensions(g, {&c8, &c42, &c222, &d4, &q8});
  std::map<std::string, int> oracle_counts;
  for (const auto& e : entries) oracle_counts[fingerprint(*e.extension).to_string()] += e.embedding_classes;

  std::map<std::string, int> eg_counts;
  for (const auto& c : eg_classes(g)) eg_counts[fingerprint(*c.extension).to_string()]++;
  CHECK(oracle_counts == eg_counts);
}
