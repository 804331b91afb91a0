#include "hq/tracked.hpp"

#include <map>
#include <queue>
#include <set>

#include "json.hpp"

namespace hq {

Walk TrackedQuiver::translate(const Walk& w) const {
  const Quiver& b = base();
  Walk r = trivial_walk(w.start);
  for (const Step& s : w.steps) {
    const Walk& x = word(s.arrow);
    r = compose(b, s.sign > 0 ? x : inverse(b, x), r);
  }
  return r;
}

namespace {

[[noreturn]] void undecided(VertexId i, VertexId j, ArrowId g, ArrowId d, const std::string& what) {
  nlohmann::json detail = {{"pair", {i, j}}, {"gamma", g}, {"delta", d}};
  fail(ErrorCode::DecisionUnknown, what, detail.dump());
}

bool same_shape(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  for (int i = 0; i < a.num_arrows(); ++i) {
    const Arrow &x = a.arrows()[i], &y = b.arrows()[i];
    if (x.id != y.id || x.src != y.src || x.tgt != y.tgt) return false;
  }
  return true;
}

}  // namespace

TrackedQuiver init_tracked(const Quiver& q, const HomotopyOracle& oracle) {
  if (!same_shape(q, oracle.quiver())) fail(ErrorCode::InvalidInput, "homotopy is defined over a different quiver");
  if (!is_loop_free(q)) fail(ErrorCode::LoopPresent, "a quiver with homotopy must be loop-free");
  TrackedQuiver t{q, oracle, {}, {}, {}};
  for (const Arrow& a : q.arrows()) t.words.push_back(arrow_walk(q, a.id));
  for (const Arrow& g : q.arrows())
    for (const Arrow& d : q.arrows()) {
      if (!(g.src == d.tgt && g.tgt == d.src) || g.src > g.tgt) continue;
      // g: j -> i with j < i ... any orientation works; test g·d closed at d.src
      Walk cyc = compose(q, arrow_walk(q, g.id), arrow_walk(q, d.id));
      Verdict v = oracle.verdict(cyc);
      if (v == Verdict::In) {
        nlohmann::json detail = {{"cycle", {g.id, d.id}}};
        fail(ErrorCode::NotReduced, "homotopy contains the 2-cycle " + g.label + " " + d.label, detail.dump());
      }
      if (v == Verdict::Unknown) undecided(d.src, d.tgt, g.id, d.id, "cannot decide a 2-cycle of the input");
    }
  return t;
}

TrackedQuiver pre_mutate(const TrackedQuiver& t, VertexId k) {
  Premutation p = premutate_with_sources(t.current, k);
  TrackedQuiver r{p.quiver, t.oracle, {}, t.log, {}};
  const Quiver& b = t.base();
  for (const PremutationSource& s : p.source) {
    switch (s.kind) {
      case PremutationSource::Kind::Kept: r.words.push_back(t.word(s.first)); break;
      case PremutationSource::Kind::Reversed: r.words.push_back(inverse(b, t.word(s.first))); break;
      case PremutationSource::Kind::Composite:
        r.words.push_back(compose(b, t.word(s.first), t.word(s.second)));
        break;
    }
  }
  return r;
}

TrackedQuiver delete_two_cycles(const TrackedQuiver& t, VertexId k) {
  check_vertex(t.current, k);
  const Quiver& q = t.current;
  const Quiver& b = t.base();
  std::set<ArrowId> removed;
  std::vector<DeletionRecord> records;
  int n = q.num_vertices();
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == k) continue;
      std::vector<ArrowId> gammas, deltas;  // j -> i and i -> j, ascending id
      for (const Arrow& a : q.arrows()) {
        if (a.src == j && a.tgt == i) gammas.push_back(a.id);
        if (a.src == i && a.tgt == j) deltas.push_back(a.id);
      }
      std::vector<char> used(deltas.size(), 0);
      for (ArrowId g : gammas) {
        for (std::size_t r = 0; r < deltas.size(); ++r) {
          if (used[r]) continue;
          Walk cyc = compose(b, t.word(g), t.word(deltas[r]));
          Membership m = t.oracle.membership(cyc);
          if (m.verdict == Verdict::Unknown) undecided(i, j, g, deltas[r], "2-cycle membership undecided; mutation aborted");
          if (m.verdict == Verdict::In) {
            used[r] = 1;
            removed.insert(g);
            removed.insert(deltas[r]);
            records.push_back({i, j, g, deltas[r], q.arrow(g).label, q.arrow(deltas[r]).label, std::move(m)});
            break;
          }
        }
      }
    }
  }
  TrackedQuiver r{Quiver(n), t.oracle, {}, t.log, std::move(records)};
  r.current.reserve_ids(q.next_id());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    if (removed.count(a.id)) continue;
    r.current.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
    r.words.push_back(t.words[i]);
  }
  return r;
}

TrackedQuiver mutate(const TrackedQuiver& t, VertexId k) {
  TrackedQuiver r = delete_two_cycles(pre_mutate(t, k), k);
  r.log.push_back(k);
  return r;
}

TrackedQuiver mutation_sequence(const TrackedQuiver& t, const std::vector<VertexId>& ks) {
  TrackedQuiver r = t;
  for (VertexId k : ks) r = mutate(r, k);
  return r;
}

namespace {

// Kuhn's augmenting-path matching; adj[u] lists admissible right vertices.
bool perfect_matching(const std::vector<std::vector<int>>& adj, int right) {
  std::vector<int> match(right, -1);
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    std::vector<char> seen(right, 0);
    auto dfs = [&](auto&& self, int x) -> bool {
      for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (match[y] < 0 || self(self, match[y])) {
          match[y] = x;
          return true;
        }
      }
      return false;
    };
    if (!dfs(dfs, u)) return false;
  }
  return true;
}

}  // namespace

bool check_involution(const TrackedQuiver& t, VertexId k) {
  TrackedQuiver twice = mutate(mutate(t, k), k);
  if (!quiver_equal_fixed_vertices(twice.current, t.current)) return false;
  const Quiver& b = t.base();
  int n = t.current.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<ArrowId> left, right;
      for (const Arrow& a : twice.current.arrows())
        if (a.src == i && a.tgt == j) left.push_back(a.id);
      for (const Arrow& a : t.current.arrows())
        if (a.src == i && a.tgt == j) right.push_back(a.id);
      std::vector<std::vector<int>> adj(left.size());
      for (std::size_t x = 0; x < left.size(); ++x)
        for (std::size_t y = 0; y < right.size(); ++y) {
          Walk loop = compose(b, twice.word(left[x]), inverse(b, t.word(right[y])));
          Verdict v = t.oracle.verdict(loop);
          if (v == Verdict::Unknown) undecided(i, j, left[x], right[y], "involution check undecided");
          if (v == Verdict::In) adj[x].push_back(static_cast<int>(y));
        }
      if (!perfect_matching(adj, static_cast<int>(right.size()))) return false;
    }
  return true;
}

std::string homotopy_fingerprint(const TrackedQuiver& t, int max_length) {
  const Quiver& q = t.current;
  std::string out;
  if (q.num_vertices() == 0) return out;
  // Depth-first enumeration of reduced walks from vertex 0.
  std::vector<Step> path;
  auto rec = [&](auto&& self, VertexId at) -> void {
    if (!path.empty() && at == 0) {
      Verdict v = t.oracle.verdict(t.translate(Walk{0, path}));
      out += v == Verdict::In ? 'I' : v == Verdict::NotIn ? 'N' : 'U';
    }
    if (static_cast<int>(path.size()) == max_length) return;
    for (const Arrow& a : q.arrows())
      for (int sign : {1, -1}) {
        VertexId from = sign > 0 ? a.src : a.tgt;
        if (from != at) continue;
        if (!path.empty() && path.back().arrow == a.id && path.back().sign == -sign) continue;
        path.push_back({a.id, sign});
        self(self, sign > 0 ? a.tgt : a.src);
        path.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

std::vector<PatternNode> explore_pattern(const TrackedQuiver& t, int depth) {
  std::vector<PatternNode> nodes;
  std::vector<TrackedQuiver> states;
  std::map<std::pair<IntMatrix, std::string>, int> index;
  auto key = [](const TrackedQuiver& s) { return std::make_pair(adjacency_matrix(s.current), homotopy_fingerprint(s)); };
  nodes.push_back({{}, t.current, -1, -1});
  states.push_back(t);
  index[key(t)] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    if (static_cast<int>(nodes[id].address.size()) >= depth) continue;
    for (int k = 0; k < t.current.num_vertices(); ++k) {
      if (!nodes[id].address.empty() && nodes[id].address.back() == k) continue;
      std::vector<VertexId> addr = nodes[id].address;
      addr.push_back(k);
      TrackedQuiver next;
      try {
        next = mutate(states[id], k);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DecisionUnknown) throw;
        nlohmann::json detail = {{"address", addr}};
        fail(ErrorCode::DecisionUnknown, std::string("pattern exploration stopped: ") + e.what(), detail.dump());
      }
      auto kk = key(next);
      auto it = index.find(kk);
      int nid = static_cast<int>(nodes.size());
      nodes.push_back({addr, next.current, id, it == index.end() ? -1 : it->second});
      states.push_back(std::move(next));
      if (it == index.end()) {
        index.emplace(std::move(kk), nid);
        todo.push(nid);
      }
    }
  }
  return nodes;
}

bool maximal_homotopy_fz_equivalence(const Quiver& q, const std::vector<VertexId>& ks) {
  if (!is_two_acyclic(q)) fail(ErrorCode::InvalidInput, "FZ comparison needs a 2-acyclic quiver");
  TrackedQuiver t = init_tracked(q, HomotopyOracle::full(q));
  IntMatrix b = exchange_matrix(q);
  for (VertexId k : ks) {
    t = mutate(t, k);
    b = fz_mutate_matrix(b, k);
    if (!is_two_acyclic(t.current) || exchange_matrix(t.current) != b) return false;
  }
  return true;
}

bool pi1_rank_monotonicity_check(const Quiver& q, int depth) {
  if (!is_acyclic(q)) fail(ErrorCode::InvalidInput, "rank monotonicity is stated for acyclic quivers");
  int base_rank = fundamental_group_rank(q);
  std::set<IntMatrix> seen;
  std::queue<std::pair<IntMatrix, int>> todo;
  IntMatrix b0 = exchange_matrix(q);
  seen.insert(b0);
  todo.push({b0, 0});
  while (!todo.empty()) {
    auto [b, d] = todo.front();
    todo.pop();
    if (fundamental_group_rank(quiver_from_exchange_matrix(b)) < base_rank) return false;
    if (d >= depth) continue;
    for (int k = 0; k < static_cast<int>(b.size()); ++k) {
      IntMatrix nb = fz_mutate_matrix(b, k);
      if (seen.insert(nb).second) todo.push({nb, d + 1});
    }
  }
  return true;
}

namespace {

bool compatible_step(const Covering& c, const std::vector<Walk>& cover_words, VertexId k,
                     const TrackedQuiver& t, Covering* next_cover, std::vector<Walk>* next_words,
                     TrackedQuiver* next_t) {
  TrackedOrbitResult orbit = orbit_mutate_tracked(c, k, t.base(), cover_words);
  TrackedQuiver mt = mutate(t, k);
  bool ok = quiver_equal_fixed_vertices(orbit.covering.base, mt.current);
  if (ok && is_weakly_admissible(orbit.covering)) {
    HomotopyOracle after = HomotopyOracle::finite_cover(orbit.covering);
    const Quiver& qb = orbit.covering.base;
    const Quiver& b = t.base();
    for (std::size_t x = 0; x < qb.arrows().size() && ok; ++x)
      for (std::size_t y = 0; y < qb.arrows().size() && ok; ++y) {
        const Arrow &g = qb.arrows()[x], &d = qb.arrows()[y];
        if (!(g.src == d.tgt && g.tgt == d.src)) continue;
        Walk local = compose(qb, arrow_walk(qb, g.id), arrow_walk(qb, d.id));
        Walk global = compose(b, orbit.base_words[x], orbit.base_words[y]);
        ok = after.verdict(local) == t.oracle.verdict(global);
      }
    // The homotopy-mutation side must agree on its own 2-cycles as well.
    for (std::size_t x = 0; x < mt.current.arrows().size() && ok; ++x)
      for (std::size_t y = 0; y < mt.current.arrows().size() && ok; ++y) {
        const Arrow &g = mt.current.arrows()[x], &d = mt.current.arrows()[y];
        if (!(g.src == d.tgt && g.tgt == d.src)) continue;
        ok = t.oracle.verdict(compose(b, mt.words[x], mt.words[y])) == Verdict::NotIn;
      }
  }
  if (next_cover) *next_cover = std::move(orbit.covering);
  if (next_words) *next_words = std::move(orbit.base_words);
  if (next_t) *next_t = std::move(mt);
  return ok;
}

}  // namespace

bool check_orbit_compatibility(const Covering& c, VertexId k, const TrackedQuiver& t) {
  if (!same_shape(c.base, t.base())) fail(ErrorCode::InvalidInput, "covering base differs from the tracked base");
  std::vector<Walk> words;
  for (const Arrow& a : c.base.arrows()) words.push_back(arrow_walk(c.base, a.id));
  return compatible_step(c, words, k, t, nullptr, nullptr, nullptr);
}

bool check_orbit_compatibility_sequence(const Covering& c, const std::vector<VertexId>& ks,
                                        const TrackedQuiver& t) {
  if (!same_shape(c.base, t.base())) fail(ErrorCode::InvalidInput, "covering base differs from the tracked base");
  Covering cur = c;
  TrackedQuiver tc = t;
  std::vector<Walk> words;
  for (const Arrow& a : c.base.arrows()) words.push_back(arrow_walk(c.base, a.id));
  // Tracked words must live in the original base for the quotient comparison.
  for (VertexId k : ks) {
    Covering nc;
    std::vector<Walk> nw;
    TrackedQuiver nt;
    if (!compatible_step(cur, words, k, tc, &nc, &nw, &nt)) return false;
    if (!is_weakly_admissible(nc)) return false;
    cur = std::move(nc);
    words = std::move(nw);
    tc = std::move(nt);
  }
  return true;
}

}  // namespace hq
