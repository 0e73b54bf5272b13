#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pseudoreal/group.hpp"
#include "pseudoreal/signature.hpp"

namespace pseudoreal {

enum class SearchMode { First, All };

/// Images of the generators of a Fuchsian group (g0; [m1..mr]) under a
/// surface-kernel epimorphism onto `group`.
struct GeneratingVector {
  const Group* group = nullptr;
  FuchsianSignature signature;
  std::vector<std::pair<Elt, Elt>> hyperbolic;  // (a_j, b_j)
  std::vector<Elt> elliptic;                    // x_i, order exactly m_i
};

/// Images of the generators of a proper NEC group (h; -; [m1..mr]) under a
/// surface-kernel epimorphism onto the full group; elliptic images lie in the
/// index-2 conformal subgroup and glide images outside it.
struct NecGeneratingVector {
  const Group* full_group = nullptr;
  std::vector<Elt> conformal;  // sorted members of the index-2 subgroup
  NecSignature signature;
  std::vector<Elt> glides;    // d_k, outside the conformal subgroup
  std::vector<Elt> elliptic;  // x_i, inside, order exactly m_i
};

/// Empty on success, otherwise a description of the violated invariant.
std::optional<std::string> validate_vector(const GeneratingVector& v);
std::optional<std::string> validate_vector(const NecGeneratingVector& v);

std::vector<GeneratingVector> fuchsian_vectors(const Group& g, const FuchsianSignature& s,
                                               SearchMode mode);

std::vector<NecGeneratingVector> nec_vectors(const Group& full, const Subgroup& conformal,
                                             const NecSignature& n, SearchMode mode);

/// Signature of the H-action on the same surface, via the cycle structure of
/// the elliptic images on cosets G/H.
FuchsianSignature subgroup_signature(const GeneratingVector& v, const Subgroup& h);

/// Same computation for the conformal restriction of an NEC action: the
/// canonical Fuchsian subgroup's elliptic images are the x_i together with
/// their glide conjugates. H must be normalized by the glide conjugation
/// (e.g. any characteristic subgroup of the conformal group).
FuchsianSignature conformal_quotient_signature(const NecGeneratingVector& v,
                                               const std::vector<Elt>& h_members);

/// The explicit pseudoreal action in every genus: C4 with
/// (1;-;[2^{g+1}]) for even g and (2;-;[2^{g-1}]) for odd g.
struct ExistenceWitness {
  std::shared_ptr<Group> full;  // C4
  NecGeneratingVector vector;
};
ExistenceWitness existencia_witness(int genus);

/// Lexicographically minimal representative under simultaneous conjugation.
NecGeneratingVector normalize_conjugation(const NecGeneratingVector& v);

std::string render_vector(const NecGeneratingVector& v);
std::string render_vector(const NecGeneratingVector& v, const Group& target,
                          const GroupMap& iso);

}  // namespace pseudoreal
