#include "pseudoreal/signature.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pseudoreal {

namespace {

long long periods_lcm(const std::vector<int>& periods) {
  long long l = 1;
  for (int m : periods) l = std::lcm(l, (long long)m);
  return l;
}

// Renders a period multiset, optionally with exponent shorthand (2^6).
std::string render_periods(const std::vector<int>& periods, bool compact) {
  if (periods.empty()) return "[-]";
  std::ostringstream os;
  os << '[';
  size_t i = 0;
  bool first = true;
  while (i < periods.size()) {
    size_t j = i;
    while (j < periods.size() && periods[j] == periods[i]) ++j;
    if (!first) os << ',';
    first = false;
    if (compact && j - i > 1)
      os << periods[i] << '^' << (j - i);
    else {
      for (size_t k = i; k < j; ++k) {
        if (k > i) os << ',';
        os << periods[i];
      }
    }
    i = j;
  }
  os << ']';
  return os.str();
}

// Parses "[m1,m2,...]" or "[-]" or "[]", accepting k^e shorthand.
std::optional<std::vector<int>> parse_periods(const std::string& text, size_t& i) {
  std::vector<int> out;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') return std::nullopt;
  ++i;
  skip();
  if (i < text.size() && text[i] == '-') {
    ++i;
    skip();
    if (i >= text.size() || text[i] != ']') return std::nullopt;
    ++i;
    return out;
  }
  if (i < text.size() && text[i] == ']') {
    ++i;
    return out;
  }
  while (true) {
    skip();
    if (i >= text.size() || !isdigit(text[i])) return std::nullopt;
    long long m = 0;
    while (i < text.size() && isdigit(text[i])) m = m * 10 + (text[i++] - '0');
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i >= text.size() || !isdigit(text[i])) return std::nullopt;
      e = 0;
      while (i < text.size() && isdigit(text[i])) e = e * 10 + (text[i++] - '0');
    }
    for (long long k = 0; k < e; ++k) out.push_back(int(m));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    return std::nullopt;
  }
  return out;
}

}  // namespace

bool FuchsianSignature::operator<(const FuchsianSignature& o) const {
  return std::tie(orbit_genus, periods) < std::tie(o.orbit_genus, o.periods);
}

long long FuchsianSignature::area_den() const { return periods_lcm(periods); }

long long FuchsianSignature::area_num() const {
  long long den = area_den();
  long long num = (2LL * orbit_genus - 2) * den;
  for (int m : periods) num += den - den / m;
  return num;
}

bool FuchsianSignature::hyperbolic() const { return area_num() > 0; }

std::string FuchsianSignature::to_string(bool compact) const {
  std::ostringstream os;
  os << '(' << orbit_genus << ';' << render_periods(periods, compact) << ')';
  return os.str();
}

bool NecSignature::operator<(const NecSignature& o) const {
  return std::tie(genus, periods) < std::tie(o.genus, o.periods);
}

long long NecSignature::area_den() const { return periods_lcm(periods); }

long long NecSignature::area_num() const {
  long long den = area_den();
  long long num = (genus - 2LL) * den;
  for (int m : periods) num += den - den / m;
  return num;
}

bool NecSignature::hyperbolic() const { return area_num() > 0; }

std::string NecSignature::to_string(bool compact) const {
  std::ostringstream os;
  os << '(' << genus << ";-;" << render_periods(periods, compact) << ')';
  return os.str();
}

FuchsianSignature make_fuchsian(int genus, std::vector<int> periods) {
  std::sort(periods.begin(), periods.end());
  for (int m : periods)
    if (m < 2) throw std::runtime_error("period < 2");
  return FuchsianSignature{genus, std::move(periods)};
}

NecSignature make_nec(int genus, std::vector<int> periods) {
  std::sort(periods.begin(), periods.end());
  for (int m : periods)
    if (m < 2) throw std::runtime_error("period < 2");
  return NecSignature{genus, std::move(periods)};
}

std::optional<FuchsianSignature> parse_fuchsian(const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(') return std::nullopt;
  ++i;
  skip();
  // bare period list "(2^6)" means orbit genus 0
  if (i < text.size() && (isdigit(text[i]))) {
    size_t save = i;
    long long g = 0;
    while (i < text.size() && isdigit(text[i])) g = g * 10 + (text[i++] - '0');
    skip();
    if (i < text.size() && text[i] == ';') {
      ++i;
      auto p = parse_periods(text, i);
      if (!p) return std::nullopt;
      skip();
      if (i >= text.size() || text[i] != ')') return std::nullopt;
      return make_fuchsian(int(g), *p);
    }
    // no ';': treat the whole content as a genus-0 period list
    i = save;
    std::string inner = "[" + text.substr(i, text.rfind(')') - i) + "]";
    size_t j = 0;
    auto p = parse_periods(inner, j);
    if (!p) return std::nullopt;
    return make_fuchsian(0, *p);
  }
  if (i < text.size() && text[i] == '[') {
    auto p = parse_periods(text, i);
    if (!p) return std::nullopt;
    skip();
    if (i >= text.size() || text[i] != ')') return std::nullopt;
    return make_fuchsian(0, *p);
  }
  return std::nullopt;
}

std::optional<NecSignature> parse_nec(const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '(') return std::nullopt;
  ++i;
  skip();
  if (i >= text.size() || !isdigit(text[i])) return std::nullopt;
  long long g = 0;
  while (i < text.size() && isdigit(text[i])) g = g * 10 + (text[i++] - '0');
  skip();
  if (i >= text.size() || text[i] != ';') return std::nullopt;
  ++i;
  skip();
  if (i >= text.size() || text[i] != '-') return std::nullopt;
  ++i;
  skip();
  if (i >= text.size() || text[i] != ';') return std::nullopt;
  ++i;
  auto p = parse_periods(text, i);
  if (!p) return std::nullopt;
  skip();
  if (i >= text.size() || text[i] != ')') return std::nullopt;
  return make_nec(int(g), *p);
}

std::optional<int> rh_genus(long long group_order, const FuchsianSignature& s) {
  // 2g - 2 = order * area; require integral, even, >= 2
  long long den = s.area_den();
  long long num = s.area_num();
  long long t = group_order * num;
  if (t % den != 0) return std::nullopt;
  long long rhs = t / den;  // = 2g - 2
  if (rhs < 2 || rhs % 2 != 0) return std::nullopt;
  return int(rhs / 2 + 1);
}

FuchsianSignature canonical_fuchsian(const NecSignature& n) {
  std::vector<int> doubled;
  for (int m : n.periods) {
    doubled.push_back(m);
    doubled.push_back(m);
  }
  return make_fuchsian(n.genus - 1, std::move(doubled));
}

std::vector<NecSignature> nec_preimages(const FuchsianSignature& s) {
  std::vector<int> halved;
  for (size_t i = 0; i < s.periods.size();) {
    size_t j = i;
    while (j < s.periods.size() && s.periods[j] == s.periods[i]) ++j;
    size_t mult = j - i;
    if (mult % 2 != 0) return {};
    for (size_t k = 0; k < mult / 2; ++k) halved.push_back(s.periods[i]);
    i = j;
  }
  NecSignature n = make_nec(s.orbit_genus + 1, std::move(halved));
  if (!n.hyperbolic()) return {};
  return {n};
}

bool is_odd_signature(const FuchsianSignature& s) {
  if (s.orbit_genus != 0) return false;
  for (size_t i = 0; i < s.periods.size();) {
    size_t j = i;
    while (j < s.periods.size() && s.periods[j] == s.periods[i]) ++j;
    if ((j - i) % 2 == 1) return true;
    i = j;
  }
  return false;
}

int teich_dim(const FuchsianSignature& s) {
  return 6 * s.orbit_genus - 6 + 2 * int(s.periods.size());
}

std::optional<SingermanRow> singerman_even_row(const FuchsianSignature& s) {
  const auto& p = s.periods;
  if (s.orbit_genus == 2 && p.empty())
    return SingermanRow{1, make_fuchsian(0, {2, 2, 2, 2, 2, 2}), 2};
  if (s.orbit_genus == 1 && p.size() == 2 && p[0] == p[1])
    return SingermanRow{2, make_fuchsian(0, {2, 2, 2, 2, p[0]}), 2};
  if (s.orbit_genus == 0 && p.size() == 4 && p[0] == p[3] && p[0] >= 3)
    return SingermanRow{3, make_fuchsian(0, {2, 2, 2, p[0]}), 4};
  if (s.orbit_genus == 0 && p.size() == 4 && p[0] == p[1] && p[2] == p[3] &&
      p[0] + p[2] >= 5)
    return SingermanRow{4, make_fuchsian(0, {2, 2, p[0], p[2]}), 2};
  return std::nullopt;
}

std::optional<NonMaximalKind> nec_nonmaximal_kind(const NecSignature& n) {
  if (n.genus == 1 && n.periods.size() == 2)
    return n.periods[0] == n.periods[1] ? NonMaximalKind::KK : NonMaximalKind::KL;
  if (n.genus == 2 && n.periods.size() == 1) return NonMaximalKind::K;
  if (n.genus == 3 && n.periods.empty()) return NonMaximalKind::FREE;
  return std::nullopt;
}

std::string to_string(NonMaximalKind k) {
  switch (k) {
    case NonMaximalKind::KL: return "KL";
    case NonMaximalKind::KK: return "KK";
    case NonMaximalKind::K: return "K";
    case NonMaximalKind::FREE: return "FREE";
  }
  return "?";
}

std::optional<NonMaximalKind> parse_kind(const std::string& s) {
  if (s == "KL") return NonMaximalKind::KL;
  if (s == "KK") return NonMaximalKind::KK;
  if (s == "K") return NonMaximalKind::K;
  if (s == "FREE") return NonMaximalKind::FREE;
  return std::nullopt;
}

std::vector<std::string> bounds_check(int genus, long long conformal_order,
                                      long long full_order) {
  std::vector<std::string> v;
  if (conformal_order > 84LL * (genus - 1))
    v.push_back("conformal order exceeds 84(g-1)");
  if (full_order > 12LL * (genus - 1)) v.push_back("full order exceeds 12(g-1)");
  if (full_order != 2 * conformal_order)
    v.push_back("full order is not twice the conformal order");
  return v;
}

}  // namespace pseudoreal
