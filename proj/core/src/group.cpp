#include "pseudoreal/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pseudoreal {

namespace {

constexpr int kAutBound = 160;
constexpr int kAxiomBound = 256;

// Hash for image vectors (automorphism dedup).
struct VecHash {
  size_t operator()(const std::vector<Elt>& v) const {
    size_t h = 1469598103934665603ull;
    for (Elt x : v) {
      h ^= size_t(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

void Group::finish(std::vector<Elt> gens, std::vector<std::string> names) {
  inv_.assign(n_, -1);
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;

  ord_.assign(n_, 1);
  for (Elt a = 1; a < n_; ++a) {
    int k = 1;
    Elt x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > n_ + 1) throw GroupError("order computation diverged");
    }
    ord_[a] = k;
  }

  gens_ = std::move(gens);
  if (gens_.empty()) {
    for (Elt a = 1; a < n_; ++a) gens_.push_back(a);  // degenerate fallback
    if (n_ == 1) gens_.clear();
  }
  gen_names_ = std::move(names);
  if (gen_names_.size() != gens_.size()) {
    gen_names_.clear();
    const char* alphabet = "abcdefghijklmnopqrstuvwxyz";
    for (size_t i = 0; i < gens_.size(); ++i)
      gen_names_.push_back(std::string(1, alphabet[i % 26]));
  }

  // Canonical words: BFS from the identity, right-multiplying by generators
  // in declaration order.
  words_.assign(n_, {});
  std::vector<char> seen(n_, 0);
  std::vector<Elt> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Elt x = queue[qi];
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      Elt y = mul(x, gens_[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        words_[y] = words_[x];
        words_[y].push_back(int(gi));
        queue.push_back(y);
      }
    }
  }
  if (int(queue.size()) != n_) throw GroupError("generators do not generate the group");

  check_axioms();
}

void Group::check_axioms() const {
  if (n_ <= 0) throw GroupError("empty group");
  for (Elt a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw GroupError("identity law fails");
  std::vector<char> hit(n_);
  for (Elt a = 0; a < n_; ++a) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Elt b = 0; b < n_; ++b) hit[mul(a, b)] = 1;
    for (Elt c = 0; c < n_; ++c)
      if (!hit[c]) throw GroupError("row is not a permutation");
    std::fill(hit.begin(), hit.end(), 0);
    for (Elt b = 0; b < n_; ++b) hit[mul(b, a)] = 1;
    for (Elt c = 0; c < n_; ++c)
      if (!hit[c]) throw GroupError("column is not a permutation");
  }
  if (n_ <= kAxiomBound) {
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b) {
        Elt ab = mul(a, b);
        for (Elt c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw GroupError("multiplication is not associative");
      }
  }
  for (Elt a = 0; a < n_; ++a)
    if (inv_[a] < 0 || mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
      throw GroupError("missing two-sided inverse");
}

Group Group::from_table(std::vector<std::vector<Elt>> table, std::vector<Elt> generators,
                        std::vector<std::string> gen_names) {
  Group g;
  g.n_ = int(table.size());
  g.table_.assign(size_t(g.n_) * g.n_, 0);
  for (int a = 0; a < g.n_; ++a) {
    if (int(table[a].size()) != g.n_) throw GroupError("ragged Cayley table");
    for (int b = 0; b < g.n_; ++b) {
      Elt v = table[a][b];
      if (v < 0 || v >= g.n_) throw GroupError("table entry out of range");
      g.table_[size_t(a) * g.n_ + b] = v;
    }
  }
  g.finish(std::move(generators), std::move(gen_names));
  return g;
}

Group Group::from_permutations(int degree, const std::vector<std::vector<int>>& perms,
                               std::vector<std::string> gen_names) {
  for (const auto& p : perms) {
    if (int(p.size()) != degree) throw GroupError("permutation degree mismatch");
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) throw GroupError("not a permutation");
      hit[v] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  auto pmul = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];  // (p*q)(i) = p(q(i))
    return r;
  };

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{id};
  index[id] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& p : perms) {
      auto y = pmul(elems[qi], p);
      if (!index.count(y)) {
        index[y] = int(elems.size());
        elems.push_back(y);
      }
    }
  }
  int n = int(elems.size());
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(pmul(elems[a], elems[b]));

  std::vector<Elt> gens;
  for (const auto& p : perms) gens.push_back(index.at(p));
  return from_table(std::move(table), std::move(gens), std::move(gen_names));
}

int Group::exponent() const {
  long long e = 1;
  for (Elt a = 0; a < n_; ++a) e = std::lcm(e, (long long)ord_[a]);
  return int(e);
}

std::string Group::word_string(Elt a) const {
  if (a == 0) return "1";
  const auto& w = words_[a];
  std::ostringstream os;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    os << gen_names_[w[i]];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::optional<Elt> Group::parse_word(const std::string& text) const {
  // Words over generator names with optional ^k / ^-k, '*' separators allowed.
  Elt acc = 0;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*')) ++i;
  };
  skip();
  if (i < text.size() && text.compare(i, 1, "1") == 0 && i + 1 == text.size()) return acc;
  while (i < text.size()) {
    skip();
    if (i >= text.size()) break;
    // longest generator-name match
    int best = -1;
    size_t best_len = 0;
    for (size_t gi = 0; gi < gen_names_.size(); ++gi) {
      const auto& nm = gen_names_[gi];
      if (!nm.empty() && text.compare(i, nm.size(), nm) == 0 && nm.size() > best_len) {
        best = int(gi);
        best_len = nm.size();
      }
    }
    if (best < 0) return std::nullopt;
    i += best_len;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      if (i >= text.size() || !isdigit(text[i])) return std::nullopt;
      exp = 0;
      while (i < text.size() && isdigit(text[i])) exp = exp * 10 + (text[i++] - '0');
      if (neg) exp = -exp;
    }
    acc = mul(acc, power(gens_[best], exp));
  }
  return acc;
}

Elt Group::power(Elt a, long long k) const {
  int o = ord_[a];
  long long r = k % o;
  if (r < 0) r += o;
  Elt acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

std::vector<Elt> Group::elements_of_order(int k) const {
  std::vector<Elt> out;
  for (Elt a = 0; a < n_; ++a)
    if (ord_[a] == k) out.push_back(a);
  return out;
}

std::vector<Elt> Group::conjugacy_class(Elt a) const {
  std::vector<char> seen(n_, 0);
  std::vector<Elt> out;
  for (Elt g = 0; g < n_; ++g) {
    Elt c = conj(g, a);
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elt>> Group::conjugacy_classes() const {
  std::vector<char> done(n_, 0);
  std::vector<std::vector<Elt>> out;
  for (Elt a = 0; a < n_; ++a) {
    if (done[a]) continue;
    auto cls = conjugacy_class(a);
    for (Elt x : cls) done[x] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

bool Group::is_abelian() const {
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// --- maps -------------------------------------------------------------------

bool GroupMap::is_homomorphism() const {
  for (Elt a = 0; a < source->order(); ++a)
    for (Elt b = 0; b < source->order(); ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool GroupMap::is_bijective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elt v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return source->order() == target->order();
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap r;
  r.source = g.source;
  r.target = f.target;
  r.images.resize(g.images.size());
  for (size_t a = 0; a < g.images.size(); ++a) r.images[a] = f.images[g.images[a]];
  return r;
}

GroupMap identity_map(const Group& g) {
  GroupMap m;
  m.source = &g;
  m.target = &g;
  m.images.resize(g.order());
  std::iota(m.images.begin(), m.images.end(), 0);
  return m;
}

GroupMap conjugation_map(const Group& g, Elt p) {
  GroupMap m;
  m.source = &g;
  m.target = &g;
  m.images.resize(g.order());
  for (Elt a = 0; a < g.order(); ++a) m.images[a] = g.conj(p, a);
  return m;
}

// --- subgroups ---------------------------------------------------------------

bool Subgroup::contains(Elt a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Subgroup make_subgroup(const Group& g, const std::vector<Elt>& members) {
  std::vector<Elt> m = members;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (!is_subgroup(g, m)) throw GroupError("member set is not a subgroup");
  return Subgroup{&g, std::move(m)};
}

bool is_subgroup(const Group& g, const std::vector<Elt>& sorted) {
  if (sorted.empty() || sorted[0] != 0) {
    if (!std::binary_search(sorted.begin(), sorted.end(), 0)) return false;
  }
  for (Elt a : sorted)
    for (Elt b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.mul(a, b))) return false;
  return true;
}

Subgroup closure(const Group& g, std::vector<Elt> seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> queue{0};
  in[0] = 1;
  for (Elt s : seeds)
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t j = 0; j < queue.size(); ++j) {
      Elt p = g.mul(queue[i], queue[j]);
      if (!in[p]) {
        in[p] = 1;
        queue.push_back(p);
      }
    }
  std::sort(queue.begin(), queue.end());
  return Subgroup{&g, std::move(queue)};
}

// --- constructors -----------------------------------------------------------

Group make_cyclic(int n) {
  if (n < 1) throw GroupError("cyclic order must be positive");
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  std::vector<Elt> gens;
  if (n > 1) gens.push_back(1);
  Group g = Group::from_table(std::move(t), gens, n > 1 ? std::vector<std::string>{"a"} : std::vector<std::string>{});
  g.name = "C" + std::to_string(n);
  return g;
}

Group make_abelian(const std::vector<int>& invariants) {
  Group g = make_cyclic(1);
  bool first = true;
  for (int k : invariants) {
    Group c = make_cyclic(k);
    g = first ? std::move(c) : direct_product(g, c);
    first = false;
  }
  std::ostringstream nm;
  for (size_t i = 0; i < invariants.size(); ++i) {
    if (i) nm << "x";
    nm << "C" << invariants[i];
  }
  g.name = nm.str();
  return g;
}

Group make_metacyclic(int n, int m, int r, int s) {
  // <a,b | a^n, b^m = a^s, b a b^-1 = a^r>
  long long rm = 1;
  for (int i = 0; i < m; ++i) rm = (rm * r) % n;
  if (rm % n != 1 % n) throw GroupError("metacyclic: r^m != 1 mod n");
  if ((long long)(s)*r % n != s % n) throw GroupError("metacyclic: s not fixed by r");

  int total = n * m;
  std::vector<long long> rpow(m);
  rpow[0] = 1;
  for (int j = 1; j < m; ++j) rpow[j] = (rpow[j - 1] * r) % n;

  auto enc = [&](int i, int j) { return i + n * j; };
  std::vector<std::vector<Elt>> t(total, std::vector<Elt>(total));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < m; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          long long i = (i1 + i2 * rpow[j1]) % n;
          int j = j1 + j2;
          if (j >= m) {
            j -= m;
            i = (i + s) % n;
          }
          t[enc(i1, j1)][enc(i2, j2)] = enc(int(i), j);
        }
  std::vector<Elt> gens;
  std::vector<std::string> names;
  if (n > 1) {
    gens.push_back(enc(1, 0));
    names.push_back("a");
  }
  if (m > 1) {
    gens.push_back(enc(0, 1));
    names.push_back(n == 1 ? "a" : (m == 2 ? "x" : "b"));
  }
  return Group::from_table(std::move(t), gens, names);
}

Group make_dihedral(int n) {
  if (n == 1) {
    Group g = make_cyclic(2);
    g.name = "D1";
    return g;
  }
  Group g = make_metacyclic(n, 2, n - 1, 0);
  g.name = "D" + std::to_string(n);
  return g;
}

Group make_dicyclic(int order) {
  if (order % 4 != 0 || order < 8) throw GroupError("dicyclic order must be 4m, m>=2");
  int m = order / 4;
  Group g = make_metacyclic(2 * m, 2, 2 * m - 1, m);
  if (order == 8) {
    // quaternion group: rename generators i, j
    std::vector<std::vector<Elt>> t(order, std::vector<Elt>(order));
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) t[a][b] = g.mul(a, b);
    Group q = Group::from_table(std::move(t), {g.generators()[0], g.generators()[1]}, {"i", "j"});
    q.name = "Q8";
    return q;
  }
  g.name = (order == 16) ? "Q16" : (order == 32 ? "Q32" : "Dic" + std::to_string(order));
  return g;
}

Group make_semidihedral(int m) {
  if (m % 4 != 0) throw GroupError("semidihedral parameter must be divisible by 4");
  Group g = make_metacyclic(m, 2, m / 2 - 1, 0);
  g.name = "QD" + std::to_string(m / 2);  // table naming: QD8 has order 16
  return g;
}

Group make_modular(int m) {
  if (m % 4 != 0) throw GroupError("modular parameter must be divisible by 4");
  Group g = make_metacyclic(m, 2, m / 2 + 1, 0);
  g.name = "M" + std::to_string(2 * m);
  return g;
}

Group make_symmetric(int n) {
  if (n < 2 || n > 5) throw GroupError("symmetric: supported range 2..5");
  std::vector<int> cyc(n), swap(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::rotate(cyc.begin(), cyc.begin() + n - 1, cyc.end());
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  Group g = Group::from_permutations(n, {cyc, swap}, {"a", "x"});
  g.name = "S" + std::to_string(n);
  return g;
}

Group make_alternating(int n) {
  if (n < 3 || n > 5) throw GroupError("alternating: supported range 3..5");
  std::vector<int> three(n), other(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::iota(other.begin(), other.end(), 0);
  if (n == 3) {
    Group g = Group::from_permutations(n, {three}, {"a"});
    g.name = "A3";
    return g;
  }
  if (n == 4) {  // (01)(23)
    other[0] = 1; other[1] = 0; other[2] = 3; other[3] = 2;
  } else {  // 5-cycle
    std::rotate(other.begin(), other.begin() + n - 1, other.end());
  }
  Group g = Group::from_permutations(n, {three, other}, {"a", "b"});
  g.name = "A" + std::to_string(n);
  return g;
}

Group direct_product(const Group& a, const Group& b) {
  int na = a.order(), nb = b.order();
  int n = na * nb;
  auto enc = [&](int x, int y) { return x * nb + y; };
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<Elt> gens;
  std::vector<std::string> names;
  const char* alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (Elt g : a.generators()) gens.push_back(enc(g, 0));
  for (Elt g : b.generators()) gens.push_back(enc(0, g));
  for (size_t i = 0; i < gens.size(); ++i) names.push_back(std::string(1, alphabet[i % 26]));
  Group p = Group::from_table(std::move(t), gens, names);
  p.name = a.name + "x" + b.name;
  return p;
}

Group semidirect_product(const Group& nn, const Group& h,
                         const std::vector<std::vector<Elt>>& action) {
  if (action.size() != h.generators().size())
    throw GroupError("semidirect: one automorphism per H generator required");
  // Resolve the action of every element of H by following its canonical word.
  int nN = nn.order(), nH = h.order();
  std::vector<std::vector<Elt>> act(nH);
  for (const auto& a : action) {
    GroupMap m{&nn, &nn, a};
    if (!m.is_homomorphism() || !m.is_bijective())
      throw GroupError("semidirect: action image is not an automorphism");
  }
  for (Elt x = 0; x < nH; ++x) {
    // phi(g_{i1} g_{i2} ...) = phi(g_{i1}) o phi(g_{i2}) o ...
    std::vector<Elt> img(nN);
    std::iota(img.begin(), img.end(), 0);
    for (int gi : h.word(x)) {
      std::vector<Elt> nxt(nN);
      for (Elt v = 0; v < nN; ++v) nxt[v] = img[action[gi][v]];
      img = std::move(nxt);
    }
    act[x] = std::move(img);
  }
  // Verify the action is a homomorphism H -> Aut(N).
  for (Elt x = 0; x < nH; ++x)
    for (Elt y = 0; y < nH; ++y) {
      Elt xy = h.mul(x, y);
      for (Elt v = 0; v < nN; ++v)
        if (act[xy][v] != act[x][act[y][v]])
          throw GroupError("semidirect: action is not a homomorphism");
    }

  int n = nN * nH;
  auto enc = [&](int v, int x) { return v * nH + x; };
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int v1 = 0; v1 < nN; ++v1)
    for (int x1 = 0; x1 < nH; ++x1)
      for (int v2 = 0; v2 < nN; ++v2)
        for (int x2 = 0; x2 < nH; ++x2)
          t[enc(v1, x1)][enc(v2, x2)] = enc(nn.mul(v1, act[x1][v2]), h.mul(x1, x2));
  std::vector<Elt> gens;
  std::vector<std::string> names;
  const char* alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (Elt g : nn.generators()) gens.push_back(enc(g, 0));
  for (Elt g : h.generators()) gens.push_back(enc(0, g));
  for (size_t i = 0; i < gens.size(); ++i) names.push_back(std::string(1, alphabet[i % 26]));
  Group p = Group::from_table(std::move(t), gens, names);
  p.name = nn.name + ":" + h.name;
  return p;
}

// --- structure ---------------------------------------------------------------

Subgroup center(const Group& g) {
  std::vector<Elt> z;
  for (Elt a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elt b = 0; b < g.order() && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup{&g, std::move(z)};
}

Subgroup derived_subgroup(const Group& g) {
  std::vector<Elt> comms;
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
  return closure(g, comms);
}

std::vector<Elt> small_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  std::vector<Elt> gens;
  Subgroup cur{&g, {0}};
  // Greedy: repeatedly add the lowest-index element that maximally enlarges
  // the closure. Deterministic and near-minimal at these orders.
  while (cur.order() < g.order()) {
    int best = -1, best_size = cur.order();
    for (Elt a = 1; a < g.order(); ++a) {
      if (cur.contains(a)) continue;
      std::vector<Elt> seed = cur.members;
      seed.push_back(a);
      int sz = closure(g, seed).order();
      if (sz > best_size) {
        best_size = sz;
        best = a;
        if (sz == g.order()) break;
      }
    }
    gens.push_back(best);
    std::vector<Elt> seed = cur.members;
    seed.push_back(best);
    cur = closure(g, seed);
  }
  return gens;
}

std::optional<GroupMap> extend_homomorphism(const Group& g, const Group& h,
                                            const std::vector<Elt>& gens,
                                            const std::vector<Elt>& images) {
  std::vector<Elt> img(g.order(), -1);
  img[0] = 0;
  std::vector<Elt> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Elt x = queue[qi];
    for (size_t i = 0; i < gens.size(); ++i) {
      Elt y = g.mul(x, gens[i]);
      Elt v = h.mul(img[x], images[i]);
      if (img[y] < 0) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (int(queue.size()) != g.order()) return std::nullopt;  // gens must generate
  // Verify the defining consistency on every (element, generator) pair that
  // was set before its neighbours were.
  for (Elt x = 0; x < g.order(); ++x)
    for (size_t i = 0; i < gens.size(); ++i)
      if (img[g.mul(x, gens[i])] != h.mul(img[x], images[i])) return std::nullopt;
  return GroupMap{&g, &h, std::move(img)};
}

namespace {

// Shared backtracking: map `gens` of g into h, candidates restricted by
// order (and conjugacy class size when h == g context permits), emitting
// every extension that is a homomorphism satisfying `accept`.
void map_search(const Group& g, const Group& h, const std::vector<Elt>& gens,
                std::vector<Elt>& chosen, size_t depth,
                const std::vector<std::vector<Elt>>& cand,
                const std::function<void(const GroupMap&)>& emit, bool injective_only) {
  if (depth == gens.size()) {
    auto m = extend_homomorphism(g, h, gens, chosen);
    if (m && (!injective_only || m->is_bijective())) emit(*m);
    return;
  }
  // prune: partial subgroup map must stay consistent; we defer the full check
  // to extend_homomorphism but cut clearly impossible branches by order.
  for (Elt c : cand[depth]) {
    chosen[depth] = c;
    // quick incremental check: the partial assignment must extend on the
    // subgroup generated so far
    std::vector<Elt> part_gens(gens.begin(), gens.begin() + depth + 1);
    std::vector<Elt> part_imgs(chosen.begin(), chosen.begin() + depth + 1);
    Subgroup sub = closure(g, part_gens);
    // build a small induced group test: walk sub via BFS on part_gens
    bool ok = true;
    {
      std::vector<Elt> img(g.order(), -1);
      img[0] = 0;
      std::vector<Elt> queue{0};
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        Elt x = queue[qi];
        for (size_t i = 0; i < part_gens.size(); ++i) {
          Elt y = g.mul(x, part_gens[i]);
          Elt v = h.mul(img[x], part_imgs[i]);
          if (img[y] < 0) {
            img[y] = v;
            queue.push_back(y);
          } else if (img[y] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok && injective_only) {
        // image sizes must match subgroup size for an eventual bijection
        std::unordered_set<Elt> vals;
        for (Elt x = 0; x < g.order(); ++x)
          if (img[x] >= 0) vals.insert(img[x]);
        if (int(vals.size()) != sub.order()) ok = false;
      }
    }
    if (ok) map_search(g, h, gens, chosen, depth + 1, cand, emit, injective_only);
  }
}

std::vector<int> class_size_profile(const Group& g) {
  std::vector<int> prof(g.order());
  for (const auto& cls : g.conjugacy_classes())
    for (Elt x : cls) prof[x] = int(cls.size());
  return prof;
}

}  // namespace

std::vector<GroupMap> automorphisms(const Group& g) {
  if (g.order() > kAutBound)
    throw GroupError("automorphism enumeration bound exceeded (order > 160)");
  std::vector<Elt> gens = small_generating_set(g);
  if (gens.empty()) return {identity_map(g)};

  auto prof = class_size_profile(g);
  std::vector<std::vector<Elt>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (Elt a = 0; a < g.order(); ++a)
      if (g.element_order(a) == g.element_order(gens[i]) && prof[a] == prof[gens[i]])
        cand[i].push_back(a);
  }
  std::vector<GroupMap> out;
  std::vector<Elt> chosen(gens.size());
  map_search(g, g, gens, chosen, 0, cand,
             [&](const GroupMap& m) { out.push_back(m); }, true);
  return out;
}

InnerData inner_automorphisms(const Group& g, const std::vector<GroupMap>& auts) {
  std::unordered_map<std::vector<Elt>, int, VecHash> pos;
  for (size_t i = 0; i < auts.size(); ++i) pos[auts[i].images] = int(i);

  InnerData data;
  std::unordered_set<int> inner;
  for (Elt p = 0; p < g.order(); ++p) {
    auto cm = conjugation_map(g, p);
    auto it = pos.find(cm.images);
    if (it == pos.end()) throw GroupError("inner automorphism missing from list");
    inner.insert(it->second);
  }
  data.inner_indices.assign(inner.begin(), inner.end());
  std::sort(data.inner_indices.begin(), data.inner_indices.end());

  std::vector<char> assigned(auts.size(), 0);
  for (size_t i = 0; i < auts.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<int> coset;
    for (int j : data.inner_indices) {
      auto comp = compose(auts[i], auts[j]);
      auto it = pos.find(comp.images);
      if (it == pos.end()) throw GroupError("automorphism set not closed");
      coset.push_back(it->second);
      assigned[it->second] = 1;
    }
    std::sort(coset.begin(), coset.end());
    data.cosets.push_back(std::move(coset));
  }
  return data;
}

bool out_has_involution(const Group& g) {
  auto auts = automorphisms(g);
  auto data = inner_automorphisms(g, auts);
  std::unordered_map<std::vector<Elt>, int, VecHash> pos;
  for (size_t i = 0; i < auts.size(); ++i) pos[auts[i].images] = int(i);
  std::vector<char> is_inner(auts.size(), 0);
  for (int i : data.inner_indices) is_inner[i] = 1;

  for (size_t i = 0; i < auts.size(); ++i) {
    if (is_inner[i]) continue;
    auto sq = compose(auts[i], auts[i]);
    int j = pos.at(sq.images);
    if (is_inner[j]) return true;
  }
  return false;
}

bool inn_has_complement(const Group& g) {
  auto auts = automorphisms(g);
  auto data = inner_automorphisms(g, auts);
  size_t inn_size = data.inner_indices.size();
  size_t out_size = auts.size() / inn_size;
  if (out_size == 1) return true;  // trivial complement

  std::unordered_map<std::vector<Elt>, int, VecHash> pos;
  for (size_t i = 0; i < auts.size(); ++i) pos[auts[i].images] = int(i);
  std::vector<char> is_inner(auts.size(), 0);
  for (int i : data.inner_indices) is_inner[i] = 1;

  // Exhaustive search for a subgroup K of Aut(G) with |K| = |Out|,
  // K meeting Inn trivially. Closure-based DFS over candidate generators.
  std::vector<int> id_index;
  for (size_t i = 0; i < auts.size(); ++i) {
    bool is_id = true;
    for (Elt a = 0; a < g.order(); ++a)
      if (auts[i].images[a] != a) {
        is_id = false;
        break;
      }
    if (is_id) id_index.push_back(int(i));
  }
  int e = id_index.at(0);

  auto close_set = [&](std::vector<int> seed) {
    std::vector<int> q = {e};
    std::unordered_set<int> in = {e};
    for (int s : seed)
      if (in.insert(s).second) q.push_back(s);
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) {
        int p = pos.at(compose(auts[q[i]], auts[q[j]]).images);
        if (in.insert(p).second) q.push_back(p);
        if (q.size() > out_size) return q;  // too big, caller rejects
      }
    return q;
  };

  std::function<bool(std::vector<int>&, int)> dfs = [&](std::vector<int>& cur, int start) {
    auto cl = close_set(cur);
    if (cl.size() > out_size) return false;
    bool trivial_meet = true;
    for (int x : cl)
      if (x != e && is_inner[x]) {
        trivial_meet = false;
        break;
      }
    if (!trivial_meet) return false;
    if (cl.size() == out_size) return true;
    for (int a = start; a < int(auts.size()); ++a) {
      if (is_inner[a] && a != e) continue;
      cur.push_back(a);
      if (dfs(cur, a + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  std::vector<int> cur;
  return dfs(cur, 0);
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  return std::tie(order, order_spectrum, center_order, class_sizes, abelianization,
                  derived_order, exponent) <
         std::tie(o.order, o.order_spectrum, o.center_order, o.class_sizes, o.abelianization,
                  o.derived_order, o.exponent);
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << order << "|exp" << exponent << "|z" << center_order << "|d" << derived_order << "|s";
  for (auto [o, c] : order_spectrum) os << o << ":" << c << ",";
  os << "|c";
  for (int s : class_sizes) os << s << ",";
  os << "|a";
  for (int s : abelianization) os << s << ",";
  return os.str();
}

// Quotient of g by a (checked) normal subgroup, as a concrete group on cosets.
Group quotient_group(const Group& g, const Subgroup& n) {
  std::vector<int> coset_of(g.order(), -1);
  std::vector<Elt> reps;
  for (Elt a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(a);
    for (Elt h : n.members) coset_of[g.mul(a, h)] = id;
  }
  int q = int(reps.size());
  std::vector<std::vector<Elt>> t(q, std::vector<Elt>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
  std::vector<Elt> gens;
  for (int i = 1; i < q; ++i) gens.push_back(i);
  if (q == 1) gens.clear();
  return Group::from_table(std::move(t), gens);
}

Group induced_group(const Group& g, const Subgroup& h, std::vector<Elt>* parent_of) {
  int m = h.order();
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < m; ++i) local[h.members[i]] = i;
  std::vector<std::vector<Elt>> t(m, std::vector<Elt>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = local[g.mul(h.members[i], h.members[j])];
      if (p < 0) throw GroupError("induced_group: not closed");
      t[i][j] = p;
    }
  if (parent_of) *parent_of = h.members;
  return Group::from_table(std::move(t), {});
}

namespace {

std::vector<int> abelian_invariants(const Group& ab) {
  // invariant factors of an abelian group, largest first: repeatedly split
  // off a maximal-order cyclic factor via quotients
  std::vector<int> factors;
  Group work = ab;
  while (work.order() > 1) {
    int e = work.exponent();
    factors.push_back(e);
    Elt gmax = -1;
    for (Elt a = 0; a < work.order(); ++a)
      if (work.element_order(a) == e) {
        gmax = a;
        break;
      }
    work = quotient_group(work, closure(work, {gmax}));
  }
  return factors;
}

}  // namespace

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  std::map<int, int> spec;
  for (Elt a = 0; a < g.order(); ++a) spec[g.element_order(a)]++;
  f.order_spectrum.assign(spec.begin(), spec.end());
  f.center_order = center(g).order();
  for (const auto& c : g.conjugacy_classes()) f.class_sizes.push_back(int(c.size()));
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  auto d = derived_subgroup(g);
  f.derived_order = d.order();
  f.abelianization = abelian_invariants(quotient_group(g, d));
  f.exponent = g.exponent();
  return f;
}

std::optional<GroupMap> is_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;

  std::vector<Elt> gens = small_generating_set(a);
  if (gens.empty()) return identity_map(a);  // trivial groups
  auto prof_a = class_size_profile(a);
  auto prof_b = class_size_profile(b);
  std::vector<std::vector<Elt>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (Elt x = 0; x < b.order(); ++x)
      if (b.element_order(x) == a.element_order(gens[i]) && prof_b[x] == prof_a[gens[i]])
        cand[i].push_back(x);

  std::optional<GroupMap> found;
  std::vector<Elt> chosen(gens.size());
  // map_search emits all; stop at the first via exception-free flag
  struct Stop {};
  try {
    map_search(a, b, gens, chosen, 0, cand,
               [&](const GroupMap& m) {
                 if (!found) {
                   found = m;
                   throw Stop{};
                 }
               },
               true);
  } catch (const Stop&) {
  }
  return found;
}

std::vector<Subgroup> index_two_subgroups(const Group& g) {
  if (g.order() % 2 != 0) return {};
  // kernel candidates all contain the subgroup generated by squares and
  // commutators
  std::vector<Elt> seeds;
  for (Elt a = 0; a < g.order(); ++a) seeds.push_back(g.mul(a, a));
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b)
      seeds.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
  Subgroup n = closure(g, seeds);
  int q = g.order() / n.order();  // elementary abelian 2-group order
  if (q == 1) return {};

  // Quotient is (C2)^r; index-2 subgroups of G correspond to its hyperplanes.
  std::vector<int> coset_of(g.order(), -1);
  std::vector<Elt> reps;
  for (Elt a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(a);
    for (Elt h : n.members) coset_of[g.mul(a, h)] = id;
  }
  int r = 0;
  while ((1 << r) < q) ++r;
  // coordinates of each coset in F2^r relative to a greedily chosen basis
  std::vector<int> coord(q, -1);
  coord[coset_of[0]] = 0;
  std::vector<int> basis;  // coset ids
  std::vector<int> known{coset_of[0]};
  for (int c = 0; c < q; ++c) {
    if (coord[c] >= 0) continue;
    basis.push_back(c);
    int bit = 1 << int(basis.size() - 1);
    std::vector<int> added;
    for (int k : known) {
      int prod = coset_of[g.mul(reps[c], reps[k])];
      if (coord[prod] < 0) {
        coord[prod] = bit ^ coord[k];
        added.push_back(prod);
      }
    }
    known.insert(known.end(), added.begin(), added.end());
  }
  std::vector<Subgroup> out;
  for (int mask = 1; mask < (1 << r); ++mask) {
    std::vector<Elt> members;
    for (Elt a = 0; a < g.order(); ++a) {
      int bits = coord[coset_of[a]];
      int dot = __builtin_popcount(bits & mask) & 1;
      if (dot == 0) members.push_back(a);
    }
    out.push_back(make_subgroup(g, members));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& x, const Subgroup& y) { return x.members < y.members; });
  return out;
}

CosetAction coset_action(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members)) throw GroupError("coset_action: not a subgroup");
  std::vector<int> coset_of(g.order(), -1);
  CosetAction act;
  for (Elt a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    int id = int(act.reps.size());
    act.reps.push_back(a);
    for (Elt x : h.members) coset_of[g.mul(a, x)] = id;
  }
  int m = int(act.reps.size());
  act.perms.assign(g.order(), std::vector<int>(m));
  for (Elt a = 0; a < g.order(); ++a)
    for (int i = 0; i < m; ++i) act.perms[a][i] = coset_of[g.mul(a, act.reps[i])];
  return act;
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
  std::vector<Elt> members;
  for (Elt a = 0; a < g.order(); ++a) {
    bool norm = true;
    for (Elt x : h.members)
      if (!h.contains(g.conj(a, x))) {
        norm = false;
        break;
      }
    if (norm) members.push_back(a);
  }
  return Subgroup{&g, std::move(members)};
}

std::vector<GroupMap> all_homomorphisms(const Group& h, const Group& a) {
  std::vector<Elt> gens = small_generating_set(h);
  if (gens.empty()) return {GroupMap{&h, &a, std::vector<Elt>(1, 0)}};
  std::vector<std::vector<Elt>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int o = h.element_order(gens[i]);
    for (Elt x = 0; x < a.order(); ++x)
      if (o % a.element_order(x) == 0) cand[i].push_back(x);
  }
  std::vector<GroupMap> out;
  std::vector<Elt> chosen(gens.size());
  map_search(h, a, gens, chosen, 0, cand,
             [&](const GroupMap& m) { out.push_back(m); }, false);
  return out;
}

}  // namespace pseudoreal
