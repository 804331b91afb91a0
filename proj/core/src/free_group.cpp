#include "hq/free_group.hpp"

#include <algorithm>
#include <queue>

namespace hq {

Word word_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (int l : w) {
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word word_mul(const Word& a, const Word& b) {
  Word r = a;
  for (int l : b) {
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

Word word_pow(const Word& w, int e) {
  Word base = e < 0 ? word_inverse(w) : w;
  Word r;
  for (int i = 0; i < std::abs(e); ++i) r = word_mul(r, base);
  return r;
}

Word word_conj(const Word& g, const Word& w) { return word_mul(word_mul(g, w), word_inverse(g)); }

Word cyclic_core(const Word& w, Word* conjugator) {
  Word r = word_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  if (conjugator) conjugator->assign(r.begin(), r.begin() + i);
  return Word(r.begin() + i, r.begin() + j);
}

Word rotate(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  r %= w.size();
  Word out(w.begin() + r, w.end());
  out.insert(out.end(), w.begin(), w.begin() + r);
  return out;
}

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word c = rotate(w, r);
    if (c < best) best = std::move(c);
  }
  return best;
}

Word word_substitute(const Word& w, const std::vector<Word>& images) {
  Word r;
  for (int l : w) {
    const Word& img = images[letter_gen(l)];
    r = word_mul(r, l > 0 ? img : word_inverse(img));
  }
  return r;
}

std::vector<long> word_abelianize(const Word& w, int rank) {
  std::vector<long> v(rank, 0);
  for (int l : w) v[letter_gen(l)] += l > 0 ? 1 : -1;
  return v;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(letter_gen(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

int connected_components(const Quiver& q, std::vector<int>* component) {
  int n = q.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> adj(n);
  for (const Arrow& a : q.arrows()) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> todo;
    todo.push(s);
    comp[s] = c;
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          todo.push(w);
        }
    }
    ++c;
  }
  if (component) *component = std::move(comp);
  return c;
}

GroupoidFrame::GroupoidFrame(const Quiver& q) : q_(q) {
  int n = q.num_vertices();
  comp_.assign(n, -1);
  paths_.assign(n, Walk{});
  is_tree_.assign(q.num_arrows(), 0);
  gen_of_.assign(q.num_arrows(), -1);
  // Incident arrows per vertex in ascending id order.
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    incident[a.src].push_back(i);
    if (a.tgt != a.src) incident[a.tgt].push_back(i);
  }
  for (int s = 0; s < n; ++s) {
    if (comp_[s] >= 0) continue;
    int c = static_cast<int>(roots_.size());
    roots_.push_back(s);
    comp_[s] = c;
    paths_[s] = trivial_walk(s);
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int idx : incident[v]) {
        const Arrow& a = q.arrows()[idx];
        int w = a.src == v ? a.tgt : a.src;
        if (comp_[w] >= 0) continue;
        comp_[w] = c;
        is_tree_[idx] = 1;
        tree_.push_back(a.id);
        Step st{a.id, a.src == v ? 1 : -1};
        Walk p = paths_[v];
        p.steps.push_back(st);
        paths_[w] = p;
        todo.push(w);
      }
    }
  }
  std::sort(tree_.begin(), tree_.end());
  for (int i = 0; i < q.num_arrows(); ++i) {
    if (is_tree_[i]) continue;
    gen_of_[i] = static_cast<int>(chords_.size());
    chords_.push_back(q.arrows()[i].id);
  }
}

bool GroupoidFrame::is_tree_arrow(ArrowId a) const {
  int i = q_.index_of(a);
  return i >= 0 && is_tree_[i];
}

int GroupoidFrame::generator_of(ArrowId a) const {
  int i = q_.index_of(a);
  if (i < 0) fail(ErrorCode::InvalidInput, "arrow not in frame quiver");
  return gen_of_[i];
}

std::vector<int> GroupoidFrame::generators_in_component(int component) const {
  std::vector<int> out;
  for (int g = 0; g < num_generators(); ++g)
    if (generator_component(g) == component) out.push_back(g);
  return out;
}

Word GroupoidFrame::chord_letters(const Walk& w) const {
  Word r;
  for (const Step& s : w.steps) {
    int g = generator_of(s.arrow);
    if (g >= 0) r.push_back(letter(g, s.sign));
  }
  return word_reduce(r);
}

Word GroupoidFrame::to_word(const Walk& closed) const {
  if (!is_closed(q_, closed)) fail(ErrorCode::NotClosed, "walk is not closed");
  return chord_letters(closed);
}

Walk GroupoidFrame::generator_walk(int g) const {
  const Arrow& a = q_.arrow(chords_[g]);
  Walk w = paths_[a.src];
  w.steps.push_back({a.id, 1});
  Walk back = inverse(q_, paths_[a.tgt]);
  w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
  w.start = roots_[comp_[a.src]];
  return reduce(w);
}

Walk GroupoidFrame::to_walk(const Word& word, int component) const {
  Walk w = trivial_walk(roots_[component]);
  for (int l : word) {
    int g = letter_gen(l);
    if (generator_component(g) != component)
      fail(ErrorCode::InvalidInput, "generator from another component");
    Walk gw = generator_walk(g);
    if (l < 0) gw = inverse(q_, gw);
    w = compose(q_, gw, w);
  }
  return w;
}

Walk GroupoidFrame::transport_to_root(const Walk& closed) const {
  if (!is_closed(q_, closed)) fail(ErrorCode::NotClosed, "walk is not closed");
  const Walk& t = paths_[closed.start];
  return compose(q_, inverse(q_, t), compose(q_, closed, t));
}

std::vector<ArrowId> spanning_tree(const Quiver& q) { return GroupoidFrame(q).tree_arrows(); }

std::vector<int> fundamental_group_rank_per_component(const Quiver& q) {
  std::vector<int> comp;
  int c = connected_components(q, &comp);
  std::vector<int> v(c, 0), e(c, 0);
  for (int x = 0; x < q.num_vertices(); ++x) ++v[comp[x]];
  for (const Arrow& a : q.arrows()) ++e[comp[a.src]];
  std::vector<int> r(c);
  for (int i = 0; i < c; ++i) r[i] = e[i] - v[i] + 1;
  return r;
}

int fundamental_group_rank(const Quiver& q) {
  int c = connected_components(q);
  return q.num_arrows() - q.num_vertices() + c;
}

CellComplex2 build_complex(const Quiver& q, const std::vector<Walk>& faces) {
  for (const Walk& w : faces) {
    validate_walk(q, w);
    if (!is_closed(q, w)) fail(ErrorCode::NotClosed, "face boundary must be a closed walk");
  }
  return CellComplex2{q, faces};
}

std::vector<Presentation> complex_presentations(const CellComplex2& x) {
  GroupoidFrame frame(x.one_skeleton);
  int c = frame.num_components();
  std::vector<Presentation> out(c);
  std::vector<std::vector<int>> local(c);
  std::vector<int> local_index(frame.num_generators(), -1);
  for (int g = 0; g < frame.num_generators(); ++g) {
    int comp = frame.generator_component(g);
    local_index[g] = out[comp].num_generators++;
  }
  for (const Walk& f : x.faces) {
    int comp = frame.component_of(f.start);
    Word w = frame.to_word(f);
    for (int& l : w) l = letter(local_index[letter_gen(l)], l > 0 ? 1 : -1);
    out[comp].relators.push_back(w);
  }
  return out;
}

}  // namespace hq
