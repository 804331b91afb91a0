#include "hq/quiver.hpp"

#include <algorithm>
#include <queue>

namespace hq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::LoopPresent: return "LoopPresent";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::DecisionUnknown: return "DecisionUnknown";
    case ErrorCode::NotWeaklyAdmissible: return "NotWeaklyAdmissible";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NonTransitive: return "NonTransitive";
    case ErrorCode::InvalidCovering: return "InvalidCovering";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::UnknownConfiguration: return "UnknownConfiguration";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

bool operator==(const Arrow& a, const Arrow& b) {
  return a.id == b.id && a.src == b.src && a.tgt == b.tgt && a.label == b.label;
}

Quiver::Quiver(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0 || n_vertices > kMaxVertices)
    fail(ErrorCode::InvalidInput,
         "vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
}

void check_vertex(const Quiver& q, VertexId v) {
  if (v < 0 || v >= q.num_vertices())
    fail(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " out of range");
}

ArrowId Quiver::add_arrow(VertexId src, VertexId tgt, std::string label) {
  ArrowId id = next_id_;
  add_arrow_with_id(id, src, tgt, std::move(label));
  return id;
}

void Quiver::add_arrow_with_id(ArrowId id, VertexId src, VertexId tgt, std::string label) {
  check_vertex(*this, src);
  check_vertex(*this, tgt);
  if (id < 0) fail(ErrorCode::InvalidInput, "negative arrow id");
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, ArrowId x) { return a.id < x; });
  if (it != arrows_.end() && it->id == id)
    fail(ErrorCode::InvalidInput, "duplicate arrow id " + std::to_string(id));
  if (label.empty()) label = "a" + std::to_string(id);
  arrows_.insert(it, Arrow{id, src, tgt, std::move(label)});
  next_id_ = std::max(next_id_, id + 1);
}

void Quiver::remove_arrow(ArrowId id) {
  int i = index_of(id);
  if (i < 0) fail(ErrorCode::InvalidInput, "no arrow with id " + std::to_string(id));
  arrows_.erase(arrows_.begin() + i);
}

int Quiver::index_of(ArrowId id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, ArrowId x) { return a.id < x; });
  if (it == arrows_.end() || it->id != id) return -1;
  return static_cast<int>(it - arrows_.begin());
}

bool Quiver::has_arrow(ArrowId id) const { return index_of(id) >= 0; }

const Arrow& Quiver::arrow(ArrowId id) const {
  int i = index_of(id);
  if (i < 0) fail(ErrorCode::InvalidInput, "no arrow with id " + std::to_string(id));
  return arrows_[i];
}

ArrowId Quiver::find_label(const std::string& label) const {
  for (const Arrow& a : arrows_)
    if (a.label == label) return a.id;
  return -1;
}

bool is_loop_free(const Quiver& q) {
  return std::none_of(q.arrows().begin(), q.arrows().end(),
                      [](const Arrow& a) { return a.src == a.tgt; });
}

bool is_two_acyclic(const Quiver& q) {
  if (!is_loop_free(q)) return false;
  IntMatrix p = adjacency_matrix(q);
  for (int i = 0; i < q.num_vertices(); ++i)
    for (int j = i + 1; j < q.num_vertices(); ++j)
      if (p[i][j] > 0 && p[j][i] > 0) return false;
  return true;
}

bool is_acyclic(const Quiver& q) {
  int n = q.num_vertices();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const Arrow& a : q.arrows()) {
    out[a.src].push_back(a.tgt);
    ++indeg[a.tgt];
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  return seen == n;
}

IntMatrix adjacency_matrix(const Quiver& q) {
  int n = q.num_vertices();
  IntMatrix p(n, std::vector<std::int64_t>(n, 0));
  for (const Arrow& a : q.arrows()) ++p[a.src][a.tgt];
  return p;
}

IntMatrix exchange_matrix(const Quiver& q) {
  IntMatrix p = adjacency_matrix(q);
  int n = q.num_vertices();
  IntMatrix b(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = p[j][i] - p[i][j];
  return b;
}

bool is_skew_symmetric(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].size() != b.size()) return false;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[i][j] != -b[j][i]) return false;
  }
  return true;
}

IntMatrix fz_mutate_matrix(const IntMatrix& b, int k) {
  if (!is_skew_symmetric(b)) fail(ErrorCode::InvalidInput, "matrix is not skew-symmetric");
  int n = static_cast<int>(b.size());
  if (k < 0 || k >= n) fail(ErrorCode::InvalidInput, "mutation index out of range");
  IntMatrix r = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r[i][j] = -b[i][j];
        continue;
      }
      std::int64_t prod = b[i][k] * b[k][j];
      if (prod > 0) r[i][j] = b[i][j] + (b[i][k] > 0 ? prod : -prod);
    }
  }
  return r;
}

Quiver quiver_from_exchange_matrix(const IntMatrix& b) {
  if (!is_skew_symmetric(b)) fail(ErrorCode::InvalidInput, "matrix is not skew-symmetric");
  int n = static_cast<int>(b.size());
  Quiver q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::int64_t c = 0; c < b[j][i]; ++c) q.add_arrow(i, j);
  return q;
}

bool quiver_equal_fixed_vertices(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() != b.num_vertices())
    fail(ErrorCode::InvalidInput, "quivers have different vertex counts");
  return adjacency_matrix(a) == adjacency_matrix(b);
}

std::string composite_label(const std::string& out_label, const std::string& in_label) {
  return "[" + out_label + in_label + "]";
}

std::string reversed_label(const std::string& label) { return label + "*"; }

Premutation premutate_with_sources(const Quiver& q, VertexId k) {
  check_vertex(q, k);
  if (!is_loop_free(q)) fail(ErrorCode::LoopPresent, "pre-mutation needs a loop-free quiver");
  Premutation r{Quiver(q.num_vertices()), {}};
  std::vector<std::pair<ArrowId, PremutationSource>> pending;
  std::vector<const Arrow*> into, out;
  for (const Arrow& a : q.arrows()) {
    if (a.tgt == k) into.push_back(&a);
    if (a.src == k) out.push_back(&a);
  }
  r.quiver.reserve_ids(q.next_id());
  for (const Arrow& a : q.arrows()) {
    if (a.src == k || a.tgt == k) {
      r.quiver.add_arrow_with_id(a.id, a.tgt, a.src, reversed_label(a.label));
      pending.push_back({a.id, {PremutationSource::Kind::Reversed, a.id, -1}});
    } else {
      r.quiver.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
      pending.push_back({a.id, {PremutationSource::Kind::Kept, a.id, -1}});
    }
  }
  // `out` and `into` are already in ascending id order.
  for (const Arrow* beta : out) {
    for (const Arrow* alpha : into) {
      if (alpha->src == beta->tgt) continue;
      ArrowId id = r.quiver.add_arrow(alpha->src, beta->tgt,
                                      composite_label(beta->label, alpha->label));
      pending.push_back({id, {PremutationSource::Kind::Composite, beta->id, alpha->id}});
    }
  }
  r.source.resize(pending.size());
  for (const auto& [id, src] : pending) r.source[r.quiver.index_of(id)] = src;
  return r;
}

Quiver fz_premutate(const Quiver& q, VertexId k) { return premutate_with_sources(q, k).quiver; }

Quiver fz_mutate_quiver(const Quiver& q, VertexId k) {
  Quiver r = fz_premutate(q, k);
  int n = r.num_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i == k || j == k) continue;
      std::vector<ArrowId> fwd, bwd;
      for (const Arrow& a : r.arrows()) {
        if (a.src == i && a.tgt == j) fwd.push_back(a.id);
        if (a.src == j && a.tgt == i) bwd.push_back(a.id);
      }
      std::size_t m = std::min(fwd.size(), bwd.size());
      for (std::size_t t = 0; t < m; ++t) {
        r.remove_arrow(fwd[t]);
        r.remove_arrow(bwd[t]);
      }
    }
  }
  return r;
}

}  // namespace hq
