#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudoreal {

using Elt = int;

class GroupError : public std::runtime_error {
public:
  explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

/// A finite group as an index-based Cayley table. Index 0 is the identity.
/// Element enumeration is canonical: breadth-first closure from the declared
/// generators, ties broken by generator declaration order then discovery
/// order, so identical constructions yield identical tables across runs.
class Group {
public:
  Group() = default;

  /// Builds from a raw Cayley table. Verifies identity, cancellation,
  /// full associativity (orders here are tiny) and inverses.
  static Group from_table(std::vector<std::vector<Elt>> table,
                          std::vector<Elt> generators,
                          std::vector<std::string> gen_names = {});

  /// Builds from permutation generators acting on 0..degree-1.
  /// Elements are enumerated by BFS words in the generators.
  static Group from_permutations(int degree,
                                 const std::vector<std::vector<int>>& perms,
                                 std::vector<std::string> gen_names = {});

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return table_[size_t(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Elt a) const { return ord_[a]; }
  int exponent() const;

  const std::vector<Elt>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  /// Canonical word of an element in the declared generators (BFS-shortest).
  const std::vector<int>& word(Elt a) const { return words_[a]; }
  std::string word_string(Elt a) const;
  std::optional<Elt> parse_word(const std::string& text) const;

  Elt power(Elt a, long long k) const;

  std::vector<Elt> elements_of_order(int k) const;
  std::vector<Elt> conjugacy_class(Elt a) const;
  std::vector<std::vector<Elt>> conjugacy_classes() const;
  bool is_abelian() const;

  std::string label;  // catalog id, "<order>.<index>"
  std::string name;   // human name, e.g. "C4xC2"

private:
  void finish(std::vector<Elt> gens, std::vector<std::string> names);
  void check_axioms() const;

  int n_ = 0;
  std::vector<Elt> table_;  // n*n row-major
  std::vector<Elt> inv_;
  std::vector<int> ord_;
  std::vector<Elt> gens_;
  std::vector<std::string> gen_names_;
  std::vector<std::vector<int>> words_;
};

/// A homomorphism between two concrete groups, stored as an image array.
struct GroupMap {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<Elt> images;  // images[a] in *target

  Elt operator()(Elt a) const { return images[a]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

GroupMap compose(const GroupMap& f, const GroupMap& g);  // a -> f(g(a))
GroupMap identity_map(const Group& g);
GroupMap conjugation_map(const Group& g, Elt p);

struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Elt> members;  // sorted

  int order() const { return int(members.size()); }
  bool contains(Elt a) const;
  int index() const { return parent->order() / order(); }
};

Subgroup make_subgroup(const Group& g, const std::vector<Elt>& members);
Subgroup closure(const Group& g, std::vector<Elt> seeds);
bool is_subgroup(const Group& g, const std::vector<Elt>& sorted_members);

// --- constructors -----------------------------------------------------------

Group make_cyclic(int n);
Group make_abelian(const std::vector<int>& invariants);
Group make_dihedral(int n);        // order 2n, n >= 1
Group make_dicyclic(int order);    // order 4m: <a,x | a^{2m}, x^2=a^m, xax^-1=a^-1>
Group make_semidihedral(int m);    // order 2m, 8 | 2m: xax^-1 = a^{m/2-1}
Group make_modular(int m);         // order 2m: xax^-1 = a^{m/2+1}
Group make_symmetric(int n);       // n <= 5
Group make_alternating(int n);     // n <= 5
/// Metacyclic <a,b | a^n, b^m = a^s, b a b^-1 = a^r>; requires r^m = 1 mod n
/// and r*s = s mod n.
Group make_metacyclic(int n, int m, int r, int s);
Group direct_product(const Group& a, const Group& b);
/// Semidirect N x| H, the action given by images of H's generators in Aut(N)
/// (each an automorphism image array of length |N|).
Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<Elt>>& action);

// --- structure operations ----------------------------------------------------

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);

/// All automorphisms, enumerated by backtracking over generator images with
/// order- and relation-pruning; deterministic order. Throws above the bound.
std::vector<GroupMap> automorphisms(const Group& g);

struct InnerData {
  std::vector<int> inner_indices;          // positions of Inn(G) in aut list
  std::vector<std::vector<int>> cosets;    // coset decomposition of Aut(G)
};
InnerData inner_automorphisms(const Group& g, const std::vector<GroupMap>& auts);

bool out_has_involution(const Group& g);
bool inn_has_complement(const Group& g);

/// Isomorphism-invariant signature used to pre-filter isomorphism tests.
struct Fingerprint {
  int order = 0;
  std::vector<std::pair<int, int>> order_spectrum;  // (element order, count)
  int center_order = 0;
  std::vector<int> class_sizes;
  std::vector<int> abelianization;  // invariant factors
  int derived_order = 0;
  int exponent = 0;
  bool operator==(const Fingerprint&) const = default;
  bool operator<(const Fingerprint& o) const;
  std::string to_string() const;
};
Fingerprint fingerprint(const Group& g);

std::optional<GroupMap> is_isomorphic(const Group& a, const Group& b);

std::vector<Subgroup> index_two_subgroups(const Group& g);

/// Permutation action of G on left cosets of H; perms[g] maps coset index i
/// to the coset of g * rep(i). Also reports the coset representatives.
struct CosetAction {
  std::vector<Elt> reps;
  std::vector<std::vector<int>> perms;
};
CosetAction coset_action(const Group& g, const Subgroup& h);

Subgroup normalizer(const Group& g, const Subgroup& h);

/// Extends the assignment gens[i] -> images[i] to a homomorphism G -> H if
/// one exists (gens must generate G). Returns nullopt on any conflict.
std::optional<GroupMap> extend_homomorphism(const Group& g, const Group& h,
                                            const std::vector<Elt>& gens,
                                            const std::vector<Elt>& images);

/// All homomorphisms H -> A with prescribed backtracking over generator
/// images (used for semidirect-product actions in the catalog generator).
std::vector<GroupMap> all_homomorphisms(const Group& h, const Group& a);

/// Minimal generating sequence found greedily (small, deterministic).
std::vector<Elt> small_generating_set(const Group& g);

/// The subgroup as a standalone group; parent_of (when given) receives the
/// parent element index of each new element.
Group induced_group(const Group& g, const Subgroup& h, std::vector<Elt>* parent_of = nullptr);

/// Quotient by a normal subgroup, as a concrete group on cosets.
Group quotient_group(const Group& g, const Subgroup& n);

}  // namespace pseudoreal
