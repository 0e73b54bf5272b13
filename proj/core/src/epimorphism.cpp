#include "pseudoreal/epimorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace pseudoreal {

namespace {

Elt product(const Group& g, const std::vector<Elt>& xs) {
  Elt p = 0;
  for (Elt x : xs) p = g.mul(p, x);
  return p;
}

bool generates(const Group& g, const std::vector<Elt>& xs) {
  return closure(g, xs).order() == g.order();
}

// Can the closure of `have` together with all remaining pool elements still
// reach the whole group? Cheap upper-bound prune.
bool can_still_generate(const Group& g, const std::vector<Elt>& have,
                        const std::vector<const std::vector<Elt>*>& remaining) {
  std::vector<Elt> all = have;
  for (auto* pool : remaining) all.insert(all.end(), pool->begin(), pool->end());
  return generates(g, all);
}

}  // namespace

std::optional<std::string> validate_vector(const GeneratingVector& v) {
  const Group& g = *v.group;
  if (int(v.elliptic.size()) != int(v.signature.periods.size()))
    return "elliptic image count differs from period count";
  if (int(v.hyperbolic.size()) != v.signature.orbit_genus)
    return "hyperbolic pair count differs from orbit genus";
  for (size_t i = 0; i < v.elliptic.size(); ++i)
    if (g.element_order(v.elliptic[i]) != v.signature.periods[i])
      return "elliptic image order differs from its period";
  Elt p = product(g, v.elliptic);
  for (auto [a, b] : v.hyperbolic) {
    Elt comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
    p = g.mul(p, comm);
  }
  if (p != 0) return "long relation x_1..x_r [a_1,b_1]..[a_g,b_g] = 1 fails";
  std::vector<Elt> all = v.elliptic;
  for (auto [a, b] : v.hyperbolic) {
    all.push_back(a);
    all.push_back(b);
  }
  if (!generates(g, all)) return "images do not generate the group";
  return std::nullopt;
}

std::optional<std::string> validate_vector(const NecGeneratingVector& v) {
  const Group& g = *v.full_group;
  if (2 * int(v.conformal.size()) != g.order()) return "conformal subgroup is not index 2";
  if (int(v.glides.size()) != v.signature.genus)
    return "glide image count differs from the signature genus";
  if (int(v.elliptic.size()) != int(v.signature.periods.size()))
    return "elliptic image count differs from period count";
  auto in_conf = [&](Elt x) {
    return std::binary_search(v.conformal.begin(), v.conformal.end(), x);
  };
  for (Elt d : v.glides)
    if (in_conf(d)) return "glide image lies in the conformal subgroup";
  for (size_t i = 0; i < v.elliptic.size(); ++i) {
    if (!in_conf(v.elliptic[i])) return "elliptic image outside the conformal subgroup";
    if (g.element_order(v.elliptic[i]) != v.signature.periods[i])
      return "elliptic image order differs from its period";
  }
  Elt p = product(g, v.elliptic);
  for (Elt d : v.glides) p = g.mul(p, g.mul(d, d));
  if (p != 0) return "long relation x_1..x_r d_1^2..d_h^2 = 1 fails";
  std::vector<Elt> all = v.elliptic;
  all.insert(all.end(), v.glides.begin(), v.glides.end());
  if (!generates(g, all)) return "images do not generate the full group";
  return std::nullopt;
}

std::vector<GeneratingVector> fuchsian_vectors(const Group& g, const FuchsianSignature& s,
                                               SearchMode mode) {
  const int r = int(s.periods.size());
  const int g0 = s.orbit_genus;
  std::vector<std::vector<Elt>> pools(r);
  for (int i = 0; i < r; ++i) {
    pools[i] = g.elements_of_order(s.periods[i]);
    if (pools[i].empty()) return {};
  }

  // conjugacy-class representatives for the first slot (full orbit dedup
  // happens at the end, and every invariant is conjugation-equivariant)
  std::vector<std::vector<Elt>> slot_pool = pools;
  if (r > 0) {
    std::vector<Elt> reps;
    std::set<std::vector<Elt>> seen;
    for (Elt x : pools[0]) {
      auto cls = g.conjugacy_class(x);
      if (seen.insert(cls).second) reps.push_back(x);
    }
    slot_pool[0] = reps;
  }

  // commutator fibers, for solving the last hyperbolic pair
  std::vector<std::vector<std::pair<Elt, Elt>>> comm_fiber;
  if (g0 > 0) {
    comm_fiber.assign(g.order(), {});
    for (Elt a = 0; a < g.order(); ++a)
      for (Elt b = 0; b < g.order(); ++b) {
        Elt c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        comm_fiber[c].push_back({a, b});
      }
  }

  std::vector<GeneratingVector> out;
  std::vector<Elt> ell(r);
  std::vector<std::pair<Elt, Elt>> hyp;
  bool stop = false;

  auto emit = [&]() {
    GeneratingVector v;
    v.group = &g;
    v.signature = s;
    v.elliptic = ell;
    v.hyperbolic = hyp;
    if (validate_vector(v)) return;
    out.push_back(std::move(v));
    if (mode == SearchMode::First) stop = true;
  };

  std::function<void(int, Elt)> hyp_rec = [&](int k, Elt acc) {
    if (stop) return;
    if (k == g0 - 1) {
      Elt need = g.inv(acc);  // last commutator must close the relation
      for (auto [a, b] : comm_fiber[need]) {
        hyp.push_back({a, b});
        emit();
        hyp.pop_back();
        if (stop) return;
      }
      return;
    }
    for (Elt a = 0; a < g.order() && !stop; ++a)
      for (Elt b = 0; b < g.order() && !stop; ++b) {
        Elt comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        hyp.push_back({a, b});
        hyp_rec(k + 1, g.mul(acc, comm));
        hyp.pop_back();
      }
  };

  std::function<void(int, Elt)> ell_rec = [&](int i, Elt acc) {
    if (stop) return;
    if (i == r) {
      if (g0 == 0) {
        if (acc == 0) {
          hyp.clear();
          emit();
        }
        return;
      }
      hyp.clear();
      hyp_rec(0, acc);
      return;
    }
    if (g0 == 0 && i == r - 1) {
      Elt need = g.inv(acc);  // solve the last elliptic from the relation
      if (g.element_order(need) != s.periods[i]) return;
      ell[i] = need;
      ell_rec(r, 0);
      return;
    }
    if (g0 == 0) {
      std::vector<Elt> have(ell.begin(), ell.begin() + i);
      std::vector<const std::vector<Elt>*> rem;
      for (int j = i; j < r; ++j) rem.push_back(&pools[j]);
      if (!can_still_generate(g, have, rem)) return;
    }
    for (Elt x : slot_pool[i]) {
      ell[i] = x;
      ell_rec(i + 1, g.mul(acc, x));
      if (stop) return;
    }
  };

  ell_rec(0, 0);

  if (mode == SearchMode::All) {
    std::set<std::pair<std::vector<Elt>, std::vector<std::pair<Elt, Elt>>>> seen;
    std::vector<GeneratingVector> dedup;
    for (auto& v : out) {
      std::pair<std::vector<Elt>, std::vector<std::pair<Elt, Elt>>> best{v.elliptic,
                                                                          v.hyperbolic};
      for (Elt t = 0; t < g.order(); ++t) {
        auto cand = std::make_pair(v.elliptic, v.hyperbolic);
        for (auto& x : cand.first) x = g.conj(t, x);
        for (auto& [a, b] : cand.second) {
          a = g.conj(t, a);
          b = g.conj(t, b);
        }
        if (cand < best) best = cand;
      }
      if (seen.insert(best).second) {
        v.elliptic = best.first;
        v.hyperbolic = best.second;
        dedup.push_back(std::move(v));
      }
    }
    return dedup;
  }
  return out;
}

std::vector<NecGeneratingVector> nec_vectors(const Group& full, const Subgroup& conformal,
                                             const NecSignature& n, SearchMode mode) {
  const Group& g = full;
  if (conformal.parent != &full || 2 * conformal.order() != full.order())
    throw GroupError("nec_vectors: conformal subgroup must have index 2");
  const int r = int(n.periods.size());
  const int h = n.genus;

  auto in_conf = [&](Elt x) {
    return std::binary_search(conformal.members.begin(), conformal.members.end(), x);
  };

  std::vector<std::vector<Elt>> pools(r);
  for (int i = 0; i < r; ++i) {
    for (Elt x : conformal.members)
      if (g.element_order(x) == n.periods[i]) pools[i].push_back(x);
    if (pools[i].empty()) return {};
  }
  std::vector<Elt> outside;
  for (Elt x = 0; x < g.order(); ++x)
    if (!in_conf(x)) outside.push_back(x);
  std::vector<std::vector<Elt>> sq_fiber(g.order());
  for (Elt d : outside) sq_fiber[g.mul(d, d)].push_back(d);

  std::vector<NecGeneratingVector> out;
  std::vector<Elt> ell(r), gl(h);
  bool stop = false;

  auto emit = [&]() {
    NecGeneratingVector v;
    v.full_group = &g;
    v.conformal = conformal.members;
    v.signature = n;
    v.glides = gl;
    v.elliptic = ell;
    if (validate_vector(v)) return;
    out.push_back(std::move(v));
    if (mode == SearchMode::First) stop = true;
  };

  std::function<void(int, Elt)> glide_rec = [&](int k, Elt acc) {
    if (stop) return;
    if (k == h - 1) {
      Elt need = g.inv(acc);  // d_h^2 must close the relation
      for (Elt d : sq_fiber[need]) {
        gl[k] = d;
        emit();
        if (stop) return;
      }
      return;
    }
    for (Elt d : outside) {
      gl[k] = d;
      glide_rec(k + 1, g.mul(acc, g.mul(d, d)));
      if (stop) return;
    }
  };

  std::function<void(int, Elt)> ell_rec = [&](int i, Elt acc) {
    if (stop) return;
    if (i == r) {
      glide_rec(0, acc);
      return;
    }
    for (Elt x : pools[i]) {
      ell[i] = x;
      ell_rec(i + 1, g.mul(acc, x));
      if (stop) return;
    }
  };
  ell_rec(0, 0);

  if (mode == SearchMode::All) {
    std::set<std::pair<std::vector<Elt>, std::vector<Elt>>> seen;
    std::vector<NecGeneratingVector> dedup;
    for (auto& v : out) {
      auto nv = normalize_conjugation(v);
      if (seen.insert({nv.glides, nv.elliptic}).second) dedup.push_back(std::move(nv));
    }
    return dedup;
  }
  return out;
}

NecGeneratingVector normalize_conjugation(const NecGeneratingVector& v) {
  const Group& g = *v.full_group;
  std::pair<std::vector<Elt>, std::vector<Elt>> best{v.glides, v.elliptic};
  for (Elt t = 0; t < g.order(); ++t) {
    std::pair<std::vector<Elt>, std::vector<Elt>> cand{v.glides, v.elliptic};
    for (auto& d : cand.first) d = g.conj(t, d);
    for (auto& x : cand.second) x = g.conj(t, x);
    if (cand < best) best = cand;
  }
  NecGeneratingVector out = v;
  out.glides = best.first;
  out.elliptic = best.second;
  return out;
}

namespace {

FuchsianSignature quotient_signature_impl(const Group& g, const Subgroup& h,
                                          const std::vector<Elt>& elliptic_images,
                                          const std::vector<int>& elliptic_periods,
                                          int surface_genus) {
  auto act = coset_action(g, h);
  int deg = int(act.reps.size());
  std::vector<int> periods;
  for (size_t i = 0; i < elliptic_images.size(); ++i) {
    const auto& perm = act.perms[elliptic_images[i]];
    std::vector<char> seen(deg, 0);
    for (int s = 0; s < deg; ++s) {
      if (seen[s]) continue;
      int len = 0, c = s;
      do {
        seen[c] = 1;
        c = perm[c];
        ++len;
      } while (c != s);
      if (elliptic_periods[i] % len != 0)
        throw GroupError("cycle length does not divide the period");
      int m = elliptic_periods[i] / len;
      if (m >= 2) periods.push_back(m);
    }
  }
  std::sort(periods.begin(), periods.end());
  // 2 g_X - 2 = |H| (2 g0 - 2 + sum(1 - 1/p))
  long long lhs = 2LL * surface_genus - 2;
  long long den = 1;
  for (int p : periods) den = std::lcm(den, (long long)p);
  long long sum_num = 0;
  for (int p : periods) sum_num += den - den / p;
  long long ho = h.order();
  long long t = lhs * den - ho * sum_num;  // = |H| den (2 g0 - 2)
  if (t % (ho * den) != 0) throw GroupError("subgroup signature: genus not integral");
  long long two_g0_minus_2 = t / (ho * den);
  if ((two_g0_minus_2 + 2) % 2 != 0) throw GroupError("subgroup signature: odd genus term");
  int g0 = int((two_g0_minus_2 + 2) / 2);
  if (g0 < 0) throw GroupError("subgroup signature: negative genus");
  return make_fuchsian(g0, periods);
}

}  // namespace

FuchsianSignature subgroup_signature(const GeneratingVector& v, const Subgroup& h) {
  const Group& g = *v.group;
  if (h.parent != &g) throw GroupError("subgroup_signature: wrong parent");
  if (!is_subgroup(g, h.members)) throw GroupError("subgroup_signature: not a subgroup");
  auto genus = rh_genus(g.order(), v.signature);
  if (!genus) throw GroupError("subgroup_signature: vector signature not admissible");
  return quotient_signature_impl(g, h, v.elliptic, v.signature.periods, *genus);
}

FuchsianSignature conformal_quotient_signature(const NecGeneratingVector& v,
                                               const std::vector<Elt>& h_members) {
  const Group& full = *v.full_group;
  Subgroup conf{&full, v.conformal};
  std::vector<Elt> parent;
  Group g = induced_group(full, conf, &parent);
  std::vector<int> local(full.order(), -1);
  for (size_t i = 0; i < parent.size(); ++i) local[parent[i]] = int(i);

  std::vector<Elt> h_local;
  for (Elt x : h_members) {
    if (local[x] < 0) throw GroupError("H must lie in the conformal subgroup");
    h_local.push_back(local[x]);
  }
  std::sort(h_local.begin(), h_local.end());
  Subgroup h{&g, h_local};
  if (!is_subgroup(g, h.members)) throw GroupError("H is not a subgroup");
  Elt d0 = v.glides.at(0);
  for (Elt x : h_members)
    if (!std::binary_search(h_members.begin(), h_members.end(), full.conj(d0, x)))
      throw GroupError("H is not stable under the anticonformal conjugation");

  // canonical Fuchsian elliptics: each x_i together with its glide conjugate
  std::vector<Elt> ell;
  std::vector<int> per;
  for (size_t i = 0; i < v.elliptic.size(); ++i) {
    ell.push_back(local[v.elliptic[i]]);
    per.push_back(v.signature.periods[i]);
    ell.push_back(local[full.conj(d0, v.elliptic[i])]);
    per.push_back(v.signature.periods[i]);
  }
  auto fsig = canonical_fuchsian(v.signature);
  auto genus = rh_genus(g.order(), fsig);
  if (!genus) throw GroupError("conformal signature not admissible");
  return quotient_signature_impl(g, h, ell, per, *genus);
}

ExistenceWitness existencia_witness(int genus) {
  if (genus < 2) throw GroupError("existencia_witness needs genus >= 2");
  ExistenceWitness w;
  w.full = std::make_shared<Group>(make_cyclic(4));
  const Group& c4 = *w.full;
  Elt a = 1, a2 = 2;
  NecGeneratingVector v;
  v.full_group = &c4;
  v.conformal = {0, 2};
  if (genus % 2 == 0) {
    v.signature = make_nec(1, std::vector<int>(genus + 1, 2));
    v.glides = {a};
    v.elliptic.assign(genus + 1, a2);
  } else {
    v.signature = make_nec(2, std::vector<int>(genus - 1, 2));
    v.glides = {a, a};
    v.elliptic.assign(genus - 1, a2);
  }
  w.vector = std::move(v);
  if (auto err = validate_vector(w.vector))
    throw GroupError("existencia witness failed validation: " + *err);
  return w;
}

std::string render_vector(const NecGeneratingVector& v) {
  return render_vector(v, *v.full_group, identity_map(*v.full_group));
}

std::string render_vector(const NecGeneratingVector& v, const Group& target,
                          const GroupMap& iso) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.glides.size(); ++i) {
    if (i) os << ',';
    os << target.word_string(iso.images[v.glides[i]]);
  }
  os << ';';
  if (v.elliptic.empty())
    os << "[-]";
  else
    for (size_t i = 0; i < v.elliptic.size(); ++i) {
      if (i) os << ',';
      os << target.word_string(iso.images[v.elliptic[i]]);
    }
  os << ')';
  return os.str();
}

}  // namespace pseudoreal
