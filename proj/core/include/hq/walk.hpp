#pragma once

#include <string>
#include <vector>

#include "hq/quiver.hpp"

namespace hq {

struct Step {
  ArrowId arrow = 0;
  int sign = 1;  // +1 traverses the arrow, -1 its formal inverse

  friend bool operator==(const Step&, const Step&) = default;
};

// A walk in the double quiver. Steps are stored in traversal order: the
// written composite "c b a" (a first) is stored as {a, b, c}.
struct Walk {
  VertexId start = 0;
  std::vector<Step> steps;

  bool trivial() const { return steps.empty(); }
  std::size_t length() const { return steps.size(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

VertexId step_source(const Quiver& q, const Step& s);
VertexId step_target(const Quiver& q, const Step& s);

// Throws NotComposable when consecutive steps do not meet.
void validate_walk(const Quiver& q, const Walk& w);
VertexId walk_source(const Quiver& q, const Walk& w);
VertexId walk_target(const Quiver& q, const Walk& w);
bool is_closed(const Quiver& q, const Walk& w);

Walk trivial_walk(VertexId v);
Walk arrow_walk(const Quiver& q, ArrowId a, int sign = 1);
// Walk built from steps listed in traversal order.
Walk make_walk(const Quiver& q, std::vector<Step> steps);
// Walk given by arrow labels in written (right-to-left) order; a trailing "^-1"
// or a leading "-" marks an inverse step. Example: {"c", "b", "a"} = a then b then c.
Walk walk_from_labels(const Quiver& q, const std::vector<std::string>& written);

Walk reduce(const Walk& w);
bool is_reduced(const Walk& w);
Walk inverse(const Quiver& q, const Walk& w);
// w1 after w2 (w2 is traversed first); requires target(w2) == source(w1).
Walk compose(const Quiver& q, const Walk& w1, const Walk& w2);
// Plain concatenation without reduction, same endpoint requirement.
Walk concatenate(const Quiver& q, const Walk& w1, const Walk& w2);
Walk power(const Quiver& q, const Walk& w, int e);
// c w c^{-1} for w closed at source(c); the result is closed at target(c).
Walk conjugate(const Quiver& q, const Walk& c, const Walk& w);

// Written form, e.g. "c b a^-1" (rightmost step first traversed).
std::string to_string(const Quiver& q, const Walk& w);

}  // namespace hq
