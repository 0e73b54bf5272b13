#include "pseudoreal/extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace pseudoreal {

namespace {

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

bool in_pg(const Group& g, const GroupMap& phi, Elt x) {
  if (phi.images[x] != x) return false;
  for (Elt a = 0; a < g.order(); ++a)
    if (phi.images[phi.images[a]] != g.conj(x, a)) return false;
  return true;
}

}  // namespace

std::vector<ExtensionDatum> pg_set(const Group& g) {
  return pg_set(g, automorphisms(g));
}

std::vector<ExtensionDatum> pg_set(const Group& g, const std::vector<GroupMap>& auts) {
  std::vector<ExtensionDatum> out;
  for (const auto& phi : auts) {
    // phi^2 as an image vector, compared against conjugations
    std::vector<Elt> sq(g.order());
    for (Elt a = 0; a < g.order(); ++a) sq[a] = phi.images[phi.images[a]];
    for (Elt x = 0; x < g.order(); ++x) {
      if (phi.images[x] != x) continue;
      bool ok = true;
      for (Elt a = 0; a < g.order(); ++a)
        if (sq[a] != g.conj(x, a)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(ExtensionDatum{phi, x});
    }
  }
  return out;
}

BuiltExtension build_extension(const Group& g, const ExtensionDatum& d) {
  if (!d.phi.is_homomorphism() || !d.phi.is_bijective() || !in_pg(g, d.phi, d.g))
    throw GroupError("build_extension: datum is not in P(G)");
  int n = g.order();
  int nn = 2 * n;
  auto enc = [&](Elt a, int eps) { return a + eps * n; };
  std::vector<std::vector<Elt>> t(nn, std::vector<Elt>(nn));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) {
      t[enc(a, 0)][enc(b, 0)] = enc(g.mul(a, b), 0);
      t[enc(a, 0)][enc(b, 1)] = enc(g.mul(a, b), 1);
      t[enc(a, 1)][enc(b, 0)] = enc(g.mul(a, d.phi.images[b]), 1);
      t[enc(a, 1)][enc(b, 1)] = enc(g.mul(g.mul(a, d.phi.images[b]), d.g), 0);
    }
  std::vector<Elt> gens;
  std::vector<std::string> names;
  for (size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back(enc(g.generators()[i], 0));
    names.push_back(g.generator_names()[i]);
  }
  gens.push_back(enc(0, 1));
  names.push_back("t");

  BuiltExtension built;
  built.group = std::make_shared<Group>(Group::from_table(std::move(t), gens, names));
  built.embedding.source = &g;
  built.embedding.target = built.group.get();
  built.embedding.images.resize(n);
  for (Elt a = 0; a < n; ++a) built.embedding.images[a] = enc(a, 0);
  built.coset_rep = enc(0, 1);
  return built;
}

std::vector<ExtensionClass> eg_classes(const Group& g) {
  auto auts = automorphisms(g);
  std::unordered_map<std::vector<Elt>, int, VecHash> aut_pos;
  for (size_t i = 0; i < auts.size(); ++i) aut_pos[auts[i].images] = int(i);

  auto data = pg_set(g, auts);
  std::map<std::pair<int, Elt>, int> pair_pos;
  for (size_t i = 0; i < data.size(); ++i) {
    int ai = aut_pos.at(data[i].phi.images);
    pair_pos[{ai, data[i].g}] = int(i);
  }

  // Orbits under (phi, g) ~ (phi o phi_h, phi(h) g h).
  std::vector<int> orbit(data.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t i = 0; i < data.size(); ++i) {
    if (orbit[i] >= 0) continue;
    int id = int(orbits.size());
    std::vector<int> members{int(i)};
    orbit[i] = id;
    for (size_t qi = 0; qi < members.size(); ++qi) {
      const auto& cur = data[members[qi]];
      for (Elt h = 0; h < g.order(); ++h) {
        auto moved = compose(cur.phi, conjugation_map(g, h));
        Elt gp = g.mul(g.mul(cur.phi.images[h], cur.g), h);
        int ai = aut_pos.at(moved.images);
        int j = pair_pos.at({ai, gp});
        if (orbit[j] < 0) {
          orbit[j] = id;
          members.push_back(j);
        }
      }
    }
    orbits.push_back(std::move(members));
  }

  std::vector<ExtensionClass> classes;
  for (const auto& members : orbits) {
    ExtensionClass c;
    c.representative = data[members[0]];
    for (int m : members) c.members.push_back(data[m]);
    bool split = false, dp = false;
    for (int m : members) {
      if (data[m].g == 0) {
        split = true;
        bool is_id = true;
        for (Elt a = 0; a < g.order(); ++a)
          if (data[m].phi.images[a] != a) {
            is_id = false;
            break;
          }
        if (is_id) dp = true;
      }
    }
    c.split = split;
    c.direct_product = dp;
    auto built = build_extension(g, c.representative);
    c.extension = built.group;
    c.embedding = built.embedding;
    c.coset_rep = built.coset_rep;

    // Independent split check: an order-2 element outside the image.
    bool invol_outside = false;
    for (Elt a = g.order(); a < c.extension->order(); ++a)
      if (c.extension->element_order(a) == 2) invol_outside = true;
    if (invol_outside != split)
      throw GroupError("extension split flags disagree between routes");
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(), [](const ExtensionClass& a, const ExtensionClass& b) {
    if (a.split != b.split) return a.split > b.split;
    return fingerprint(*a.extension) < fingerprint(*b.extension);
  });
  return classes;
}

std::vector<ExtensionClass> nonsplit_extensions(const Group& g) {
  std::vector<ExtensionClass> out;
  for (auto& c : eg_classes(g))
    if (!c.split) out.push_back(std::move(c));
  return out;
}

bool comp_excluded(const Group& g) {
  if (center(g).order() != 1) return false;
  if (!out_has_involution(g)) return true;
  return inn_has_complement(g);
}

namespace {

// Does some automorphism of e map h1 onto h2 (setwise)? Searched by mapping a
// generating set of h1 plus one outside element, with membership-respecting
// candidates.
bool pair_equivalent(const Group& e, const std::vector<Elt>& h1, const std::vector<Elt>& h2) {
  if (h1 == h2) return true;
  Subgroup s1{&e, h1};
  std::vector<Elt> gens;
  {
    // generating set of h1 as a subgroup, then one element outside
    Subgroup cur{&e, {0}};
    while (cur.order() < int(h1.size())) {
      for (Elt a : h1) {
        if (cur.contains(a)) continue;
        std::vector<Elt> seed = cur.members;
        seed.push_back(a);
        auto c = closure(e, seed);
        gens.push_back(a);
        cur = c;
        break;
      }
    }
    for (Elt a = 0; a < e.order(); ++a)
      if (!std::binary_search(h1.begin(), h1.end(), a)) {
        gens.push_back(a);
        break;
      }
  }
  auto in_h2 = [&](Elt x) { return std::binary_search(h2.begin(), h2.end(), x); };

  std::function<bool(std::vector<Elt>&, size_t)> rec = [&](std::vector<Elt>& chosen,
                                                           size_t depth) -> bool {
    if (depth == gens.size()) {
      auto m = extend_homomorphism(e, e, gens, chosen);
      if (!m || !m->is_bijective()) return false;
      for (Elt x : h1)
        if (!in_h2(m->images[x])) return false;
      return true;
    }
    bool inside = std::binary_search(h1.begin(), h1.end(), gens[depth]);
    for (Elt c = 0; c < e.order(); ++c) {
      if (e.element_order(c) != e.element_order(gens[depth])) continue;
      if (in_h2(c) != inside) continue;
      chosen[depth] = c;
      // partial consistency via BFS on the chosen prefix
      std::vector<Elt> pg(gens.begin(), gens.begin() + depth + 1);
      std::vector<Elt> pi(chosen.begin(), chosen.begin() + depth + 1);
      std::vector<Elt> img(e.order(), -1);
      img[0] = 0;
      std::vector<Elt> queue{0};
      bool ok = true;
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        Elt x = queue[qi];
        for (size_t i = 0; i < pg.size(); ++i) {
          Elt y = e.mul(x, pg[i]);
          Elt v = e.mul(img[x], pi[i]);
          if (img[y] < 0) {
            img[y] = v;
            queue.push_back(y);
          } else if (img[y] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok && rec(chosen, depth + 1)) return true;
    }
    return false;
  };
  std::vector<Elt> chosen(gens.size());
  return rec(chosen, 0);
}

// [Aut(H) : R(H)] where R(H) is the image in Aut(H) of the Aut(E)-stabilizer
// of H. Each beta in Aut(H) is tested for extendability to E.
int identification_classes(const Group& e, const std::vector<Elt>& h_members) {
  Subgroup h{&e, h_members};
  std::vector<Elt> parent;
  Group hg = induced_group(e, h, &parent);
  auto h_auts = automorphisms(hg);

  // generators of H (as parent elements) and one outside element
  std::vector<Elt> hgens_local = small_generating_set(hg);
  std::vector<Elt> hgens_parent;
  for (Elt x : hgens_local) hgens_parent.push_back(parent[x]);
  Elt outside = -1;
  for (Elt a = 0; a < e.order(); ++a)
    if (!std::binary_search(h_members.begin(), h_members.end(), a)) {
      outside = a;
      break;
    }

  std::vector<Elt> gens = hgens_parent;
  gens.push_back(outside);

  int extendable = 0;
  for (const auto& beta : h_auts) {
    bool found = false;
    for (Elt t = 0; t < e.order() && !found; ++t) {
      if (std::binary_search(h_members.begin(), h_members.end(), t)) continue;
      if (e.element_order(t) != e.element_order(outside)) continue;
      std::vector<Elt> images;
      for (Elt x : hgens_local) images.push_back(parent[beta.images[x]]);
      images.push_back(t);
      auto m = extend_homomorphism(e, e, gens, images);
      if (m && m->is_bijective()) found = true;
    }
    if (found) ++extendable;
  }
  if (extendable == 0) throw GroupError("identity automorphism failed to extend");
  return int(h_auts.size()) / extendable;
}

}  // namespace

std::vector<OracleEntry> oracle_extensions(const Group& g,
                                           const std::vector<const Group*>& order2n) {
  std::vector<OracleEntry> out;
  for (const Group* e : order2n) {
    if (e->order() != 2 * g.order()) throw GroupError("oracle: candidate has wrong order");
    std::vector<std::vector<Elt>> matching;
    for (const auto& h : index_two_subgroups(*e)) {
      std::vector<Elt> parent;
      Group hg = induced_group(*e, h, &parent);
      if (is_isomorphic(hg, g)) matching.push_back(h.members);
    }
    if (matching.empty()) continue;
    // merge into Aut(E)-orbits
    std::vector<std::vector<Elt>> reps;
    std::vector<int> classes_per_rep;
    for (const auto& m : matching) {
      bool merged = false;
      for (const auto& r : reps)
        if (pair_equivalent(*e, r, m) || pair_equivalent(*e, m, r)) {
          merged = true;
          break;
        }
      if (!merged) {
        reps.push_back(m);
        classes_per_rep.push_back(identification_classes(*e, m));
      }
    }
    int total = 0;
    for (int c : classes_per_rep) total += c;
    out.push_back(OracleEntry{e, total});
  }
  return out;
}

}  // namespace pseudoreal
