#include "hq/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace hq {

Word evaluate(const Decomposition& d, const std::vector<Word>& relators) {
  Word r;
  for (const Factor& f : d) {
    if (f.relator < 0 || f.relator >= static_cast<int>(relators.size()))
      fail(ErrorCode::InvalidInput, "factor refers to a missing relator");
    r = word_mul(r, word_conj(f.conjugator, word_pow(relators[f.relator], f.exponent)));
  }
  return r;
}

Decomposition decomposition_inverse(const Decomposition& d) {
  Decomposition r(d.rbegin(), d.rend());
  for (Factor& f : r) f.exponent = -f.exponent;
  return r;
}

Decomposition decomposition_conjugate(const Decomposition& d, const Word& g) {
  Decomposition r = d;
  for (Factor& f : r) f.conjugator = word_mul(g, f.conjugator);
  return r;
}

void append(Decomposition& into, const Decomposition& d) { into.insert(into.end(), d.begin(), d.end()); }

NormalClosureSolver::NormalClosureSolver(int num_generators, std::vector<Word> relators)
    : n_(num_generators), original_(std::move(relators)) {
  for (const Word& r : original_)
    for (int l : r)
      if (letter_gen(l) >= n_) fail(ErrorCode::InvalidInput, "relator uses an unknown generator");

  for (int i = 0; i < static_cast<int>(original_.size()); ++i) {
    Word v;
    Word c = cyclic_core(original_[i], &v);
    if (c.empty()) continue;
    remaining_.push_back({c, {{word_inverse(v), i, 1}}});
  }

  std::vector<char> eliminated(n_, 0);
  while (true) {
    // Shortest relator having a generator that occurs exactly once.
    int best = -1, best_gen = -1;
    for (int i = 0; i < static_cast<int>(remaining_.size()); ++i) {
      const Word& w = remaining_[i].word;
      if (best >= 0 && w.size() >= remaining_[best].word.size()) continue;
      std::map<int, int> count;
      for (int l : w) ++count[letter_gen(l)];
      for (auto [g, c] : count)
        if (c == 1) {
          best = i;
          best_gen = g;
          break;
        }
    }
    if (best < 0) break;

    Current cur = remaining_[best];
    remaining_.erase(remaining_.begin() + best);
    auto at = std::find_if(cur.word.begin(), cur.word.end(),
                           [&](int l) { return letter_gen(l) == best_gen; });
    if (*at < 0) {
      cur.word = word_inverse(cur.word);
      cur.proof = decomposition_inverse(cur.proof);
      at = std::find(cur.word.begin(), cur.word.end(), letter(best_gen, 1));
    }
    std::size_t p = static_cast<std::size_t>(at - cur.word.begin());
    Word prefix(cur.word.begin(), cur.word.begin() + p);
    Level lvl;
    lvl.gen = best_gen;
    lvl.rel_rotated = rotate(cur.word, p);
    lvl.rel = decomposition_conjugate(cur.proof, word_inverse(prefix));
    lvl.image = word_inverse(Word(lvl.rel_rotated.begin() + 1, lvl.rel_rotated.end()));
    eliminated[best_gen] = 1;
    levels_.push_back(lvl);

    std::vector<Current> next;
    for (Current& c : remaining_) {
      Decomposition l;
      Word img = apply_level(lvl, c.word, &l);
      Decomposition proof = decomposition_inverse(l);
      append(proof, c.proof);
      Word v;
      Word core = cyclic_core(img, &v);
      if (core.empty()) continue;
      next.push_back({core, decomposition_conjugate(proof, word_inverse(v))});
    }
    remaining_ = std::move(next);
  }

  for (int g = 0; g < n_; ++g)
    if (!eliminated[g]) surviving_.push_back(g);
  images_.assign(n_, Word{});
  for (int g : surviving_) images_[g] = {letter(g, 1)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    // Later levels already have final images; this level's image only uses
    // generators that are survivors or eliminated later.
    images_[it->gen] = word_substitute(it->image, images_);
  }
}

Word NormalClosureSolver::apply_level(const Level& l, const Word& z, Decomposition* out) const {
  Word prefix;
  Word s = word_inverse(l.image);
  for (int x : z) {
    if (x == letter(l.gen, 1)) {
      append(*out, decomposition_conjugate(l.rel, prefix));
      prefix = word_mul(prefix, l.image);
    } else if (x == letter(l.gen, -1)) {
      append(*out, decomposition_conjugate(decomposition_inverse(l.rel), word_mul(prefix, s)));
      prefix = word_mul(prefix, s);
    } else {
      prefix = word_mul(prefix, Word{x});
    }
  }
  return prefix;
}

Decomposition NormalClosureSolver::lift_kernel(const Word& z) const {
  Decomposition d;
  Word cur = word_reduce(z);
  for (const Level& l : levels_) cur = apply_level(l, cur, &d);
  if (!cur.empty()) fail(ErrorCode::InvalidInput, "word is not in the elimination kernel");
  return d;
}

WordVerdict NormalClosureSolver::decide(const Word& w, std::int64_t search_bound) const {
  WordVerdict v;
  Decomposition d;
  Word cur = word_reduce(w);
  for (const Level& l : levels_) cur = apply_level(l, cur, &d);
  if (cur.empty()) {
    v.kind = WordVerdict::Kind::In;
    v.witness = std::move(d);
    return v;
  }
  if (exact()) {
    v.kind = WordVerdict::Kind::NotIn;
    v.free_image = images_;
    return v;
  }
  auto found = search(cur, search_bound, &v.expansions);
  if (!found) return v;
  for (const Factor& f : *found) {
    const Decomposition& proof = remaining_[f.relator].proof;
    Decomposition p = f.exponent > 0 ? proof : decomposition_inverse(proof);
    for (int e = 1; e < std::abs(f.exponent); ++e) append(p, f.exponent > 0 ? proof : decomposition_inverse(proof));
    append(d, decomposition_conjugate(p, f.conjugator));
  }
  v.kind = WordVerdict::Kind::In;
  v.witness = std::move(d);
  return v;
}

namespace {

struct SearchNode {
  Word core;
  int parent = -1;
  std::size_t rot = 0;  // rotation of the parent core
  int rel = 0, sign = 1;
  std::size_t rel_rot = 0;
  Word v;  // cyclic-reduction conjugator of the child
};

}  // namespace

// Best-first search over cyclic words: from the current core insert a
// rotation of r^{±1} that cancels at least one letter, keep the cyclic core.
// State invariant along a path: z = h · C · core · h^{-1}.
std::optional<Decomposition> NormalClosureSolver::search(const Word& z, std::int64_t bound,
                                                         std::int64_t* expansions) const {
  std::vector<Word> rels;
  std::size_t max_rel = 0;
  for (const Current& c : remaining_) {
    rels.push_back(c.word);
    max_rel = std::max(max_rel, c.word.size());
  }
  Word v0;
  Word c0 = cyclic_core(z, &v0);
  const std::size_t cap = c0.size() + max_rel;

  std::vector<SearchNode> nodes;
  nodes.push_back({c0, -1, 0, 0, 1, 0, v0});
  using Key = std::pair<std::size_t, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> open;
  open.push({c0.size(), 0});
  std::set<Word> seen{min_rotation(c0)};
  int goal = c0.empty() ? 0 : -1;

  while (goal < 0 && !open.empty() && *expansions < bound) {
    int id = open.top().second;
    open.pop();
    const Word core = nodes[id].core;
    for (std::size_t i = 0; i < core.size() && goal < 0; ++i) {
      Word rot = rotate(core, i);
      for (int j = 0; j < static_cast<int>(rels.size()) && goal < 0; ++j) {
        for (int sign : {1, -1}) {
          Word base = sign > 0 ? rels[j] : word_inverse(rels[j]);
          for (std::size_t s = 0; s < base.size(); ++s) {
            Word rr = rotate(base, s);
            if (rr.back() != -rot.front()) continue;
            ++*expansions;
            Word nw = word_mul(rr, rot);
            Word v;
            Word nc = cyclic_core(nw, &v);
            if (nc.size() > cap) continue;
            if (!seen.insert(min_rotation(nc)).second) continue;
            nodes.push_back({nc, id, i, j, sign, s, v});
            int nid = static_cast<int>(nodes.size()) - 1;
            if (nc.empty()) {
              goal = nid;
              break;
            }
            open.push({nc.size(), nid});
          }
          if (goal >= 0) break;
        }
      }
    }
  }
  if (goal < 0) return std::nullopt;

  std::vector<int> path;
  for (int id = goal; id >= 0; id = nodes[id].parent) path.push_back(id);
  std::reverse(path.begin(), path.end());
  Word h = nodes[path[0]].v;
  Decomposition c;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const SearchNode& n = nodes[path[k]];
    const Word& parent_core = nodes[n.parent].core;
    Word a(parent_core.begin(), parent_core.begin() + n.rot);
    Word base = n.sign > 0 ? rels[n.rel] : word_inverse(rels[n.rel]);
    Word t(base.begin(), base.begin() + n.rel_rot);
    // rr = t^{-1} base t; C <- a^{-1} C a · rr^{-1}; h <- h a
    c = decomposition_conjugate(c, word_inverse(a));
    c.push_back({word_inverse(t), n.rel, -n.sign});
    h = word_mul(h, a);
    c = decomposition_conjugate(c, word_inverse(n.v));
    h = word_mul(h, n.v);
  }
  return decomposition_conjugate(c, h);
}

std::vector<Word> NormalClosureSolver::remaining_relators() const {
  std::vector<Word> out;
  for (const Current& c : remaining_) out.push_back(c.word);
  return out;
}

}  // namespace hq
