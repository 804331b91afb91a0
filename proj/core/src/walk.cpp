#include "hq/walk.hpp"

#include <algorithm>

namespace hq {

VertexId step_source(const Quiver& q, const Step& s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.sign > 0 ? a.src : a.tgt;
}

VertexId step_target(const Quiver& q, const Step& s) {
  const Arrow& a = q.arrow(s.arrow);
  return s.sign > 0 ? a.tgt : a.src;
}

void validate_walk(const Quiver& q, const Walk& w) {
  check_vertex(q, w.start);
  VertexId at = w.start;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Step& s = w.steps[i];
    if (s.sign != 1 && s.sign != -1) fail(ErrorCode::InvalidInput, "step sign must be +1 or -1");
    if (step_source(q, s) != at)
      fail(ErrorCode::NotComposable, "walk breaks at step " + std::to_string(i));
    at = step_target(q, s);
  }
}

VertexId walk_source(const Quiver&, const Walk& w) { return w.start; }

VertexId walk_target(const Quiver& q, const Walk& w) {
  if (w.steps.empty()) return w.start;
  return step_target(q, w.steps.back());
}

bool is_closed(const Quiver& q, const Walk& w) { return walk_target(q, w) == w.start; }

Walk trivial_walk(VertexId v) { return Walk{v, {}}; }

Walk arrow_walk(const Quiver& q, ArrowId a, int sign) {
  Step s{a, sign};
  return Walk{step_source(q, s), {s}};
}

Walk make_walk(const Quiver& q, std::vector<Step> steps) {
  if (steps.empty()) fail(ErrorCode::InvalidInput, "make_walk needs at least one step");
  Walk w{step_source(q, steps.front()), std::move(steps)};
  validate_walk(q, w);
  return w;
}

Walk walk_from_labels(const Quiver& q, const std::vector<std::string>& written) {
  std::vector<Step> steps;
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    std::string name = *it;
    int sign = 1;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      name.resize(name.size() - 3);
    } else if (!name.empty() && name[0] == '-') {
      sign = -1;
      name.erase(0, 1);
    }
    ArrowId id = q.find_label(name);
    if (id < 0) fail(ErrorCode::InvalidInput, "no arrow labelled '" + name + "'");
    steps.push_back({id, sign});
  }
  return make_walk(q, std::move(steps));
}

Walk reduce(const Walk& w) {
  Walk r{w.start, {}};
  r.steps.reserve(w.steps.size());
  for (const Step& s : w.steps) {
    if (!r.steps.empty() && r.steps.back().arrow == s.arrow && r.steps.back().sign == -s.sign)
      r.steps.pop_back();
    else
      r.steps.push_back(s);
  }
  return r;
}

bool is_reduced(const Walk& w) {
  for (std::size_t i = 1; i < w.steps.size(); ++i)
    if (w.steps[i].arrow == w.steps[i - 1].arrow && w.steps[i].sign == -w.steps[i - 1].sign)
      return false;
  return true;
}

Walk inverse(const Quiver& q, const Walk& w) {
  Walk r{walk_target(q, w), {}};
  r.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    r.steps.push_back({it->arrow, -it->sign});
  return r;
}

Walk concatenate(const Quiver& q, const Walk& w1, const Walk& w2) {
  if (walk_target(q, w2) != w1.start)
    fail(ErrorCode::NotComposable, "walks do not compose: target of the first traversed walk "
                                   "differs from the source of the second");
  Walk r{w2.start, w2.steps};
  r.steps.insert(r.steps.end(), w1.steps.begin(), w1.steps.end());
  return r;
}

Walk compose(const Quiver& q, const Walk& w1, const Walk& w2) {
  return reduce(concatenate(q, w1, w2));
}

Walk power(const Quiver& q, const Walk& w, int e) {
  if (!is_closed(q, w) && e != 1 && e != -1)
    fail(ErrorCode::NotClosed, "only closed walks can be raised to powers");
  Walk base = e < 0 ? inverse(q, w) : w;
  Walk r = trivial_walk(w.start);
  for (int i = 0; i < std::abs(e); ++i) r = compose(q, base, r);
  return r;
}

Walk conjugate(const Quiver& q, const Walk& c, const Walk& w) {
  if (!is_closed(q, w)) fail(ErrorCode::NotClosed, "conjugated walk must be closed");
  if (c.start != w.start) fail(ErrorCode::NotComposable, "conjugator must start at the base of w");
  return compose(q, c, compose(q, w, inverse(q, c)));
}

std::string to_string(const Quiver& q, const Walk& w) {
  if (w.steps.empty()) return "e" + std::to_string(w.start);
  std::string out;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += q.arrow(it->arrow).label;
    if (it->sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace hq
