#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pseudoreal {

/// Fuchsian signature (g; [m1,...,mr]), periods kept sorted ascending.
struct FuchsianSignature {
  int orbit_genus = 0;
  std::vector<int> periods;

  bool operator==(const FuchsianSignature&) const = default;
  bool operator<(const FuchsianSignature& o) const;

  /// 2*g0 - 2 + sum(1 - 1/m), as an exact rational times the lcm; callers use
  /// area_num/area_den.
  long long area_num() const;
  long long area_den() const;
  bool hyperbolic() const;
  std::string to_string(bool compact = false) const;
};

/// Proper NEC signature (h; -; [m1,...,mr]; {-}): no reflections, no boundary.
struct NecSignature {
  int genus = 0;  // non-orientable genus, >= 1
  std::vector<int> periods;

  bool operator==(const NecSignature&) const = default;
  bool operator<(const NecSignature& o) const;

  long long area_num() const;  // h - 2 + sum(1 - 1/m), times area_den()
  long long area_den() const;
  bool hyperbolic() const;
  std::string to_string(bool compact = false) const;
};

FuchsianSignature make_fuchsian(int genus, std::vector<int> periods);
NecSignature make_nec(int genus, std::vector<int> periods);

std::optional<FuchsianSignature> parse_fuchsian(const std::string& text);
std::optional<NecSignature> parse_nec(const std::string& text);

/// Riemann-Hurwitz: returns g with 2g-2 = order * (2g0 - 2 + sum(1-1/m)) when
/// the right side is an even non-negative integer >= 2; absent otherwise.
std::optional<int> rh_genus(long long group_order, const FuchsianSignature& s);

/// Canonical Fuchsian subgroup signature of a proper NEC group without
/// reflections: (h-1; [m1,m1,...,mr,mr]).
FuchsianSignature canonical_fuchsian(const NecSignature& n);

/// Inverse of the doubling map: nonempty iff every period has even
/// multiplicity and the halved NEC signature has positive reduced area.
std::vector<NecSignature> nec_preimages(const FuchsianSignature& s);

bool is_odd_signature(const FuchsianSignature& s);

int teich_dim(const FuchsianSignature& s);

/// Even rows of the Singerman list.
struct SingermanRow {
  int row = 0;  // 1..4
  FuchsianSignature containing;
  int index = 0;
};
std::optional<SingermanRow> singerman_even_row(const FuchsianSignature& s);

enum class NonMaximalKind { KL, KK, K, FREE };
std::optional<NonMaximalKind> nec_nonmaximal_kind(const NecSignature& n);
std::string to_string(NonMaximalKind k);
std::optional<NonMaximalKind> parse_kind(const std::string& s);

/// Order-bound checks for a classification row.
std::vector<std::string> bounds_check(int genus, long long conformal_order,
                                      long long full_order);

}  // namespace pseudoreal
