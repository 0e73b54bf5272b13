#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pseudoreal/epimorphism.hpp"
#include "pseudoreal/signature.hpp"

namespace pseudoreal {

/// Containment rule for one non-finitely-maximal NEC signature family.
/// For word rules, `conj` gives the conjugate of each presentation generator
/// by the overgroup coset representative, as a word in d1..dh, x1..xr.
struct ContainmentRule {
  NonMaximalKind kind = NonMaximalKind::FREE;
  int index = 2;
  enum class Test { Word, Assembly } test = Test::Word;
  std::map<std::string, std::vector<std::pair<std::string, int>>> conj;
};

struct RuleSet {
  std::map<NonMaximalKind, ContainmentRule> rules;
  const ContainmentRule& rule_for(NonMaximalKind kind) const;
};

/// Parses the fixture format: one rule per record,
///   RULE kind=<KL|KK|K|FREE> index=<n>
/// followed by either `TEST assembly` or lines `CONJ <gen> = <word>`.
RuleSet parse_rules(std::istream& in);
RuleSet builtin_rules();

/// True when the witness survives: the prescribed rewriting does NOT extend
/// to an automorphism of the full group through any admissible pairing, so
/// the action does not extend and the full group stays put.
bool apply_rule(const ContainmentRule& rule, const NecGeneratingVector& v);

}  // namespace pseudoreal
