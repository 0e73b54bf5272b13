#pragma once

#include <memory>
#include <vector>

#include "pseudoreal/group.hpp"

namespace pseudoreal {

/// A pair (phi, g) with phi^2 = conjugation-by-g and phi(g) = g.
struct ExtensionDatum {
  GroupMap phi;
  Elt g = 0;
};

/// One class of E(G) = P(G)/~ together with its concrete degree-2 extension.
struct ExtensionClass {
  ExtensionDatum representative;
  std::vector<ExtensionDatum> members;
  std::shared_ptr<Group> extension;  // order 2|G|
  GroupMap embedding;                // G -> extension, index-2 image
  Elt coset_rep = 0;                 // outside the image; rep^2 = embed(g)
  bool split = false;
  bool direct_product = false;
};

std::vector<ExtensionDatum> pg_set(const Group& g);
std::vector<ExtensionDatum> pg_set(const Group& g, const std::vector<GroupMap>& auts);

std::vector<ExtensionClass> eg_classes(const Group& g);

/// Concrete extension on element set G x {0,1}:
///   (a,0)(b,e) = (ab, e); (a,1)(b,0) = (a phi(b), 1); (a,1)(b,1) = (a phi(b) g, 0).
struct BuiltExtension {
  std::shared_ptr<Group> group;
  GroupMap embedding;
  Elt coset_rep;
};
BuiltExtension build_extension(const Group& g, const ExtensionDatum& d);

/// The non-split classes of eg_classes(g).
std::vector<ExtensionClass> nonsplit_extensions(const Group& g);

/// Corollary-style exclusion: Z(G) trivial and (no involution in Out(G) or
/// Inn(G) has a complement) means G is never the conformal group of a
/// pseudoreal surface.
bool comp_excluded(const Group& g);

/// Test oracle: scans a set of candidate groups of order 2|G| and counts, for
/// each, the extension-isomorphism classes of index-2 embeddings of G.
struct OracleEntry {
  const Group* extension;
  int embedding_classes;  // distinct up to automorphisms of the pair
};
std::vector<OracleEntry> oracle_extensions(const Group& g,
                                           const std::vector<const Group*>& order2n);

}  // namespace pseudoreal
