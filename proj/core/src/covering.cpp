#include "hq/covering.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "hq/free_group.hpp"

namespace hq {

std::vector<VertexId> Covering::fiber(VertexId base_vertex) const {
  std::vector<VertexId> f;
  for (int x = 0; x < static_cast<int>(vmap.size()); ++x)
    if (vmap[x] == base_vertex) f.push_back(x);
  return f;
}

CoveringCheck check_covering(const Covering& c) {
  auto bad = [](std::string why) { return CoveringCheck{false, std::move(why)}; };
  const Quiver& t = c.total;
  const Quiver& b = c.base;
  if (static_cast<int>(c.vmap.size()) != t.num_vertices()) return bad("vertex map size differs from total vertex count");
  if (static_cast<int>(c.amap.size()) != t.num_arrows()) return bad("arrow map size differs from total arrow count");
  for (VertexId v : c.vmap)
    if (v < 0 || v >= b.num_vertices()) return bad("vertex map leaves the base");
  for (std::size_t i = 0; i < c.amap.size(); ++i)
    if (!b.has_arrow(c.amap[i])) return bad("arrow map leaves the base");
  // (1) compatibility with source and target
  for (std::size_t i = 0; i < c.amap.size(); ++i) {
    const Arrow& ta = t.arrows()[i];
    const Arrow& ba = b.arrow(c.amap[i]);
    if (c.vmap[ta.src] != ba.src || c.vmap[ta.tgt] != ba.tgt)
      return bad("arrow " + std::to_string(ta.id) + " does not commute with source/target");
  }
  // (2) surjective on vertices
  std::vector<char> hit(b.num_vertices(), 0);
  for (VertexId v : c.vmap) hit[v] = 1;
  for (int v = 0; v < b.num_vertices(); ++v)
    if (!hit[v]) return bad("vertex map is not surjective (misses " + std::to_string(v) + ")");
  // (3) local bijections on outgoing and incoming arrows
  std::vector<std::map<ArrowId, int>> out(t.num_vertices()), in(t.num_vertices());
  for (std::size_t i = 0; i < c.amap.size(); ++i) {
    const Arrow& ta = t.arrows()[i];
    ++out[ta.src][c.amap[i]];
    ++in[ta.tgt][c.amap[i]];
  }
  for (int x = 0; x < t.num_vertices(); ++x) {
    for (const Arrow& ba : b.arrows()) {
      if (ba.src == c.vmap[x]) {
        auto it = out[x].find(ba.id);
        if (it == out[x].end() || it->second != 1)
          return bad("no bijection on outgoing arrows at total vertex " + std::to_string(x));
      }
      if (ba.tgt == c.vmap[x]) {
        auto it = in[x].find(ba.id);
        if (it == in[x].end() || it->second != 1)
          return bad("no bijection on incoming arrows at total vertex " + std::to_string(x));
      }
    }
  }
  return {};
}

bool validate_covering(const Covering& c) { return check_covering(c).ok; }

LiftTable::LiftTable(const Covering& c) : total_(&c.total), base_(&c.base) {
  out_.assign(c.total.num_vertices(), {});
  in_.assign(c.total.num_vertices(), {});
  for (std::size_t i = 0; i < c.amap.size(); ++i) {
    const Arrow& a = c.total.arrows()[i];
    out_[a.src][c.amap[i]] = a.id;
    in_[a.tgt][c.amap[i]] = a.id;
  }
}

ArrowId LiftTable::lift_step(VertexId x, const Step& s) const {
  if (x < 0 || x >= static_cast<int>(out_.size())) return -1;
  const auto& table = s.sign > 0 ? out_[x] : in_[x];
  auto it = table.find(s.arrow);
  return it == table.end() ? -1 : it->second;
}

VertexId LiftTable::lift_endpoint(VertexId x, const Walk& w) const {
  for (const Step& s : w.steps) {
    ArrowId a = lift_step(x, s);
    if (a < 0) return -1;
    const Arrow& ta = total_->arrow(a);
    x = s.sign > 0 ? ta.tgt : ta.src;
  }
  return x;
}

Walk LiftTable::lift(VertexId x, const Walk& w) const {
  Walk r = trivial_walk(x);
  for (const Step& s : w.steps) {
    ArrowId a = lift_step(x, s);
    if (a < 0) fail(ErrorCode::InvalidCovering, "walk does not lift");
    r.steps.push_back({a, s.sign});
    const Arrow& ta = total_->arrow(a);
    x = s.sign > 0 ? ta.tgt : ta.src;
  }
  return r;
}

namespace {

// Propagate a deck candidate over the component containing `root`, sending
// root to `image`. Fills vperm (and aperm by arrow position); false on conflict.
bool propagate(const Covering& c, const LiftTable& lt, VertexId root, VertexId image,
               std::vector<VertexId>& vperm, std::vector<ArrowId>& aperm) {
  const Quiver& t = c.total;
  std::vector<std::vector<int>> incident(t.num_vertices());
  for (int i = 0; i < t.num_arrows(); ++i) {
    incident[t.arrows()[i].src].push_back(i);
    incident[t.arrows()[i].tgt].push_back(i);
  }
  vperm[root] = image;
  std::queue<VertexId> todo;
  todo.push(root);
  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop();
    for (int i : incident[x]) {
      const Arrow& a = t.arrows()[i];
      int sign = a.src == x ? 1 : -1;
      ArrowId img = lt.lift_step(vperm[x], {c.amap[i], sign});
      if (img < 0) return false;
      if (aperm[i] >= 0 && aperm[i] != img) return false;
      aperm[i] = img;
      const Arrow& ia = t.arrow(img);
      for (auto [from, to] : {std::pair{a.src, ia.src}, std::pair{a.tgt, ia.tgt}}) {
        if (vperm[from] < 0) {
          vperm[from] = to;
          todo.push(from);
        } else if (vperm[from] != to) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<DeckElement> deck_transformations(const Covering& c) {
  if (c.total.num_arrows() > 10000)
    fail(ErrorCode::ResourceLimit, "deck computation capped at 10^4 total arrows; supply the deck action explicitly");
  CoveringCheck chk = check_covering(c);
  if (!chk.ok) fail(ErrorCode::InvalidCovering, chk.violation);
  LiftTable lt(c);
  std::vector<int> comp;
  int ncomp = connected_components(c.total, &comp);
  std::vector<VertexId> roots(ncomp, -1);
  for (int x = 0; x < c.total.num_vertices(); ++x)
    if (roots[comp[x]] < 0) roots[comp[x]] = x;

  std::vector<DeckElement> out;
  int nv = c.total.num_vertices(), na = c.total.num_arrows();
  DeckElement cur{std::vector<VertexId>(nv, -1), std::vector<ArrowId>(na, -1)};
  // Depth-first over components: choose the image of each component root.
  auto rec = [&](auto&& self, int ci) -> void {
    if (ci == ncomp) {
      std::vector<char> used(nv, 0);
      for (VertexId v : cur.vperm) {
        if (used[v]) return;
        used[v] = 1;
      }
      out.push_back(cur);
      return;
    }
    for (VertexId y : c.fiber(c.vmap[roots[ci]])) {
      DeckElement saved = cur;
      if (propagate(c, lt, roots[ci], y, cur.vperm, cur.aperm)) {
        // injectivity so far
        std::vector<char> used(nv, 0);
        bool inj = true;
        for (VertexId v : cur.vperm)
          if (v >= 0) {
            if (used[v]) inj = false;
            used[v] = 1;
          }
        if (inj) self(self, ci + 1);
      }
      cur = saved;
    }
  };
  rec(rec, 0);
  // Identity first, the rest in lexicographic order of vertex images.
  std::sort(out.begin(), out.end(), [](const DeckElement& a, const DeckElement& b) { return a.vperm < b.vperm; });
  return out;
}

bool is_deck_element(const Covering& c, const DeckElement& g) {
  const Quiver& t = c.total;
  if (static_cast<int>(g.vperm.size()) != t.num_vertices() || static_cast<int>(g.aperm.size()) != t.num_arrows())
    return false;
  std::vector<char> vs(t.num_vertices(), 0);
  for (VertexId v : g.vperm) {
    if (v < 0 || v >= t.num_vertices() || vs[v]) return false;
    vs[v] = 1;
  }
  std::set<ArrowId> as;
  for (int i = 0; i < t.num_arrows(); ++i) {
    const Arrow& a = t.arrows()[i];
    if (!t.has_arrow(g.aperm[i]) || !as.insert(g.aperm[i]).second) return false;
    const Arrow& b = t.arrow(g.aperm[i]);
    if (b.src != g.vperm[a.src] || b.tgt != g.vperm[a.tgt]) return false;
    if (c.amap[t.index_of(b.id)] != c.amap[i]) return false;
    if (c.vmap[g.vperm[a.src]] != c.vmap[a.src]) return false;
  }
  for (int x = 0; x < t.num_vertices(); ++x)
    if (c.vmap[g.vperm[x]] != c.vmap[x]) return false;
  return true;
}

std::vector<DeckElement> deck_group(const Covering& c) {
  if (!c.deck.empty() &&
      std::all_of(c.deck.begin(), c.deck.end(), [&](const DeckElement& g) { return is_deck_element(c, g); }))
    return c.deck;
  return deck_transformations(c);
}

bool is_regular(const Covering& c) {
  std::vector<DeckElement> deck = deck_group(c);
  for (int v = 0; v < c.base.num_vertices(); ++v) {
    std::vector<VertexId> f = c.fiber(v);
    std::set<VertexId> orbit;
    for (const DeckElement& g : deck) orbit.insert(g.vperm[f.front()]);
    if (orbit.size() != f.size()) return false;
  }
  return true;
}

bool is_weakly_admissible(const Covering& c) { return is_two_acyclic(c.total) && is_loop_free(c.base); }
bool is_admissible(const Covering& c) { return is_two_acyclic(c.total) && is_two_acyclic(c.base); }

Covering identity_covering(const Quiver& q) {
  Covering c{q, q, {}, {}, {}};
  for (int v = 0; v < q.num_vertices(); ++v) c.vmap.push_back(v);
  for (const Arrow& a : q.arrows()) c.amap.push_back(a.id);
  return c;
}

Covering build_regular_cover(const Quiver& q, const std::vector<std::vector<int>>& perms) {
  GroupoidFrame frame(q);
  if (static_cast<int>(perms.size()) != frame.num_generators())
    fail(ErrorCode::InvalidInput, "need one permutation per chord generator (" +
                                      std::to_string(frame.num_generators()) + ")");
  int m = perms.empty() ? 1 : static_cast<int>(perms.front().size());
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != m) fail(ErrorCode::InvalidInput, "permutations of different sizes");
    std::vector<char> seen(m, 0);
    for (int x : p) {
      if (x < 0 || x >= m || seen[x]) fail(ErrorCode::InvalidInput, "not a permutation");
      seen[x] = 1;
    }
  }
  std::vector<char> reached(m, 0);
  std::queue<int> todo;
  reached[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    int s = todo.front();
    todo.pop();
    for (const auto& p : perms)
      if (!reached[p[s]]) {
        reached[p[s]] = 1;
        todo.push(p[s]);
      }
  }
  if (std::count(reached.begin(), reached.end(), 1) != m)
    fail(ErrorCode::NonTransitive, "permutations do not act transitively");
  if (q.num_vertices() * m > kMaxVertices)
    fail(ErrorCode::ResourceLimit, "cover would exceed the vertex limit");

  Covering c{Quiver(q.num_vertices() * m), q, {}, {}, {}};
  for (int v = 0; v < q.num_vertices(); ++v)
    for (int s = 0; s < m; ++s) c.vmap.push_back(v);
  for (const Arrow& a : q.arrows()) {
    int g = frame.generator_of(a.id);
    for (int s = 0; s < m; ++s) {
      int to = g < 0 ? s : perms[g][s];
      c.total.add_arrow(a.src * m + s, a.tgt * m + to, a.label + "_" + std::to_string(s));
      c.amap.push_back(a.id);
    }
  }
  return c;
}

Covering build_cover_from_group(const Quiver& q, const std::vector<int>& images,
                                const std::vector<std::vector<int>>& mul) {
  int order = static_cast<int>(mul.size());
  std::vector<std::vector<int>> perms;
  for (int img : images) {
    if (img < 0 || img >= order) fail(ErrorCode::InvalidInput, "group element out of range");
    std::vector<int> p(order);
    for (int s = 0; s < order; ++s) p[s] = mul[s][img];
    perms.push_back(p);
  }
  return build_regular_cover(q, perms);
}

namespace {

struct OrbitPre {
  Covering cov;
  std::vector<PremutationSource> source;       // parallel to cov.total arrows
  std::map<ArrowId, PremutationSource> base_source;  // by base arrow id
};

OrbitPre orbit_pre(const Covering& c, VertexId k, std::vector<DeckElement>* deck_out) {
  check_vertex(c.base, k);
  CoveringCheck chk = check_covering(c);
  if (!chk.ok) fail(ErrorCode::InvalidCovering, chk.violation);
  if (!is_weakly_admissible(c)) fail(ErrorCode::NotWeaklyAdmissible, "covering is not weakly admissible");
  std::vector<DeckElement> deck = deck_group(c);
  {
    Covering probe = c;
    probe.deck = deck;
    if (!is_regular(probe)) fail(ErrorCode::NotRegular, "orbit mutation needs a regular covering");
  }

  const Quiver& t = c.total;
  const Quiver& b = c.base;
  OrbitPre r;
  Quiver nb(b.num_vertices());
  nb.reserve_ids(b.next_id());
  for (const Arrow& a : b.arrows()) {
    if (a.src == k || a.tgt == k) {
      nb.add_arrow_with_id(a.id, a.tgt, a.src, reversed_label(a.label));
      r.base_source[a.id] = {PremutationSource::Kind::Reversed, a.id, -1};
    } else {
      nb.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
      r.base_source[a.id] = {PremutationSource::Kind::Kept, a.id, -1};
    }
  }
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> base_comp;
  for (const Arrow& beta : b.arrows()) {
    if (beta.src != k) continue;
    for (const Arrow& alpha : b.arrows()) {
      if (alpha.tgt != k) continue;
      ArrowId id = nb.add_arrow(alpha.src, beta.tgt, composite_label(beta.label, alpha.label));
      base_comp[{beta.id, alpha.id}] = id;
      r.base_source[id] = {PremutationSource::Kind::Composite, beta.id, alpha.id};
    }
  }

  std::vector<char> in_fiber(t.num_vertices(), 0);
  for (int x = 0; x < t.num_vertices(); ++x) in_fiber[x] = c.vmap[x] == k;
  Quiver nt(t.num_vertices());
  nt.reserve_ids(t.next_id());
  std::map<ArrowId, ArrowId> to_base;
  std::map<ArrowId, PremutationSource> src;
  for (std::size_t i = 0; i < t.arrows().size(); ++i) {
    const Arrow& a = t.arrows()[i];
    if (in_fiber[a.src] || in_fiber[a.tgt]) {
      nt.add_arrow_with_id(a.id, a.tgt, a.src, reversed_label(a.label));
      src[a.id] = {PremutationSource::Kind::Reversed, a.id, -1};
    } else {
      nt.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
      src[a.id] = {PremutationSource::Kind::Kept, a.id, -1};
    }
    to_base[a.id] = c.amap[i];
  }
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> total_comp;
  for (std::size_t i = 0; i < t.arrows().size(); ++i) {
    const Arrow& beta = t.arrows()[i];
    if (!in_fiber[beta.src]) continue;
    for (std::size_t j = 0; j < t.arrows().size(); ++j) {
      const Arrow& alpha = t.arrows()[j];
      if (alpha.tgt != beta.src) continue;
      ArrowId id = nt.add_arrow(alpha.src, beta.tgt, composite_label(beta.label, alpha.label));
      total_comp[{beta.id, alpha.id}] = id;
      to_base[id] = base_comp.at({c.amap[i], c.amap[j]});
      src[id] = {PremutationSource::Kind::Composite, beta.id, alpha.id};
    }
  }

  // Extended deck action.
  std::vector<DeckElement> ext;
  for (const DeckElement& g : deck) {
    DeckElement e{g.vperm, std::vector<ArrowId>(nt.num_arrows(), -1)};
    auto img = [&](ArrowId a) { return g.aperm[t.index_of(a)]; };
    for (int i = 0; i < nt.num_arrows(); ++i) {
      const PremutationSource& s = src[nt.arrows()[i].id];
      if (s.kind == PremutationSource::Kind::Composite)
        e.aperm[i] = total_comp.at({img(s.first), img(s.second)});
      else
        e.aperm[i] = img(s.first);
    }
    ext.push_back(std::move(e));
  }

  r.cov.total = std::move(nt);
  r.cov.base = std::move(nb);
  r.cov.vmap = c.vmap;
  for (const Arrow& a : r.cov.total.arrows()) {
    r.cov.amap.push_back(to_base[a.id]);
    r.source.push_back(src[a.id]);
  }
  r.cov.deck = ext;
  if (deck_out) *deck_out = std::move(ext);
  return r;
}

Covering restrict_arrows(const Covering& c, const std::set<ArrowId>& drop_total) {
  Covering r;
  r.vmap = c.vmap;
  r.total = Quiver(c.total.num_vertices());
  r.total.reserve_ids(c.total.next_id());
  std::map<ArrowId, int> count;
  for (std::size_t i = 0; i < c.total.arrows().size(); ++i) {
    const Arrow& a = c.total.arrows()[i];
    if (drop_total.count(a.id)) continue;
    r.total.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
    r.amap.push_back(c.amap[i]);
    ++count[c.amap[i]];
  }
  r.base = Quiver(c.base.num_vertices());
  r.base.reserve_ids(c.base.next_id());
  for (const Arrow& a : c.base.arrows())
    if (count[a.id] > 0) r.base.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
  for (const DeckElement& g : c.deck) {
    DeckElement e{g.vperm, {}};
    for (std::size_t i = 0; i < c.total.arrows().size(); ++i)
      if (!drop_total.count(c.total.arrows()[i].id)) e.aperm.push_back(g.aperm[i]);
    r.deck.push_back(std::move(e));
  }
  return r;
}

// Gamma-equivariant choice of a maximal collection of 2-cycles away from the fiber of k.
std::set<ArrowId> equivariant_deletion(const Covering& pre, VertexId k) {
  const Quiver& t = pre.total;
  const auto& deck = pre.deck;
  int n = t.num_vertices();
  auto gimg = [&](const DeckElement& g, ArrowId a) { return g.aperm[t.index_of(a)]; };
  std::set<ArrowId> del;
  std::set<std::pair<int, int>> done;
  for (int i = 0; i < n; ++i) {
    if (pre.vmap[i] == k) continue;
    for (int j = i + 1; j < n; ++j) {
      if (pre.vmap[j] == k || done.count({i, j})) continue;
      std::vector<ArrowId> fwd, bwd;
      for (const Arrow& a : t.arrows()) {
        if (a.src == i && a.tgt == j) fwd.push_back(a.id);
        if (a.src == j && a.tgt == i) bwd.push_back(a.id);
      }
      const DeckElement* swap = nullptr;
      for (const DeckElement& g : deck) {
        int gi = g.vperm[i], gj = g.vperm[j];
        done.insert({std::min(gi, gj), std::max(gi, gj)});
        if (gi == j && gj == i) swap = &g;
      }
      if (fwd.empty() || bwd.empty()) continue;
      std::vector<std::pair<ArrowId, ArrowId>> pairs;
      if (swap) {
        // Every arrow j->i is paired with its image under the swapping element.
        for (ArrowId a : bwd) pairs.push_back({gimg(*swap, a), a});
      } else {
        std::size_t m = std::min(fwd.size(), bwd.size());
        for (std::size_t s = 0; s < m; ++s) pairs.push_back({fwd[s], bwd[s]});
      }
      for (const DeckElement& g : deck)
        for (auto [a, b] : pairs) {
          del.insert(gimg(g, a));
          del.insert(gimg(g, b));
        }
    }
  }
  return del;
}

}  // namespace

Covering orbit_premutate(const Covering& c, VertexId k) { return orbit_pre(c, k, nullptr).cov; }

Covering orbit_mutate(const Covering& c, VertexId k) {
  OrbitPre pre = orbit_pre(c, k, nullptr);
  return restrict_arrows(pre.cov, equivariant_deletion(pre.cov, k));
}

TrackedOrbitResult orbit_mutate_tracked(const Covering& c, VertexId k, const Quiver& word_quiver,
                                        const std::vector<Walk>& base_words) {
  if (static_cast<int>(base_words.size()) != c.base.num_arrows())
    fail(ErrorCode::InvalidInput, "need one word per base arrow");
  OrbitPre pre = orbit_pre(c, k, nullptr);
  TrackedOrbitResult r;
  r.covering = restrict_arrows(pre.cov, equivariant_deletion(pre.cov, k));
  auto word_of = [&](ArrowId a) -> const Walk& { return base_words[c.base.index_of(a)]; };
  for (const Arrow& a : r.covering.base.arrows()) {
    const PremutationSource& s = pre.base_source.at(a.id);
    switch (s.kind) {
      case PremutationSource::Kind::Kept: r.base_words.push_back(word_of(s.first)); break;
      case PremutationSource::Kind::Reversed: r.base_words.push_back(inverse(word_quiver, word_of(s.first))); break;
      case PremutationSource::Kind::Composite:
        r.base_words.push_back(compose(word_quiver, word_of(s.first), word_of(s.second)));
        break;
    }
  }
  return r;
}

bool is_k_mutable(const Covering& c, VertexId k) { return is_weakly_admissible(orbit_mutate(c, k)); }

bool sufficient_k_mutable(const Covering& c, VertexId k) {
  if (!is_weakly_admissible(c)) fail(ErrorCode::NotWeaklyAdmissible, "covering is not weakly admissible");
  LiftTable lt(c);
  VertexId x = c.fiber(k).front();
  for (const Arrow& beta : c.base.arrows()) {
    if (beta.src != k) continue;
    for (const Arrow& alpha : c.base.arrows()) {
      if (alpha.src != beta.tgt || alpha.tgt != k) continue;
      // (beta alpha)^2 in written order, as a closed walk at k: beta, alpha, beta, alpha.
      Walk w{k, {{beta.id, 1}, {alpha.id, 1}, {beta.id, 1}, {alpha.id, 1}}};
      for (VertexId y : c.fiber(k))
        if (lt.lift_endpoint(y, w) != y) return false;
      (void)x;
    }
  }
  return true;
}

GlobalCheck check_global_bounded(const Covering& c, int depth) {
  GlobalCheck out;
  if (!is_weakly_admissible(c)) {
    out.ok = false;
    return out;
  }
  struct Node {
    Covering cov;
    std::vector<VertexId> seq;
  };
  std::queue<Node> todo;
  todo.push({c, {}});
  while (!todo.empty()) {
    Node n = std::move(todo.front());
    todo.pop();
    ++out.nodes_visited;
    if (static_cast<int>(n.seq.size()) >= depth) continue;
    for (int k = 0; k < n.cov.base.num_vertices(); ++k) {
      if (!n.seq.empty() && n.seq.back() == k) continue;
      Covering next = orbit_mutate(n.cov, k);
      std::vector<VertexId> seq = n.seq;
      seq.push_back(k);
      if (!is_weakly_admissible(next)) {
        out.ok = false;
        out.counterexample = seq;
        return out;
      }
      todo.push({std::move(next), std::move(seq)});
    }
  }
  return out;
}

}  // namespace hq
