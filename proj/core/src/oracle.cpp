#include "hq/oracle.hpp"

#include <cstdlib>

#include "hq/presentation.hpp"

namespace hq {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::In: return "In";
    case Verdict::NotIn: return "NotIn";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::None: return "None";
    case Certificate::Full: return "Full";
    case Certificate::TrivialWord: return "TrivialWord";
    case Certificate::NonEmptyReducedWord: return "NonEmptyReducedWord";
    case Certificate::Witness: return "Witness";
    case Certificate::ClosedLift: return "ClosedLift";
    case Certificate::NonClosedLift: return "NonClosedLift";
    case Certificate::LatticeMember: return "LatticeMember";
    case Certificate::AbelianObstruction: return "AbelianObstruction";
    case Certificate::FreeImage: return "FreeImage";
  }
  return "?";
}

const char* oracle_kind_name(HomotopyOracle::Kind k) {
  switch (k) {
    case HomotopyOracle::Kind::Trivial: return "trivial";
    case HomotopyOracle::Kind::Full: return "full";
    case HomotopyOracle::Kind::Generated: return "generated";
    case HomotopyOracle::Kind::FiniteCover: return "cover";
    case HomotopyOracle::Kind::AbelianQuotient: return "abelian";
  }
  return "?";
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

std::int64_t default_search_bound() {
  if (const char* env = std::getenv("HQ_SEARCH_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return kDefaultSearchBound;
}

ZVector abelian_image(const Quiver& q, const Walk& w) {
  ZVector v(q.num_arrows(), 0);
  for (const Step& s : w.steps) v[q.index_of(s.arrow)] += s.sign;
  return v;
}

struct HomotopyOracle::State {
  Kind kind = Kind::Trivial;
  Quiver q;
  std::vector<Walk> gens;
  std::int64_t bound = kDefaultSearchBound;
  Covering cover;
  LiftTable lifts;
  GroupoidFrame frame;
  SmithForm lattice;
  // Generated: one solver per component, with local -> global generator index.
  std::vector<std::unique_ptr<NormalClosureSolver>> solvers;
  std::vector<std::vector<int>> solver_gens;
};

namespace {

SmithForm relator_lattice(const Quiver& q, const std::vector<Walk>& gens) {
  ZMatrix m(q.num_arrows(), ZVector(gens.size(), 0));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    ZVector a = abelian_image(q, gens[j]);
    for (int i = 0; i < q.num_arrows(); ++i) m[i][j] = a[i];
  }
  return smith_normal_form(m);
}

std::vector<Walk> checked_generators(const Quiver& q, std::vector<Walk> gens) {
  for (Walk& g : gens) {
    validate_walk(q, g);
    if (!is_closed(q, g)) fail(ErrorCode::NotClosed, "homotopy generators must be closed walks");
    g = reduce(g);
  }
  return gens;
}

}  // namespace

HomotopyOracle HomotopyOracle::trivial(const Quiver& q) {
  auto s = std::make_shared<State>();
  s->kind = Kind::Trivial;
  s->q = q;
  HomotopyOracle h;
  h.s_ = s;
  return h;
}

HomotopyOracle HomotopyOracle::full(const Quiver& q) {
  auto s = std::make_shared<State>();
  s->kind = Kind::Full;
  s->q = q;
  HomotopyOracle h;
  h.s_ = s;
  return h;
}

HomotopyOracle HomotopyOracle::generated(const Quiver& q, std::vector<Walk> generators,
                                         std::int64_t search_bound) {
  auto s = std::make_shared<State>();
  s->kind = Kind::Generated;
  s->q = q;
  s->gens = checked_generators(q, std::move(generators));
  s->bound = search_bound;
  s->frame = GroupoidFrame(q);
  s->lattice = relator_lattice(q, s->gens);
  int comps = s->frame.num_components();
  std::vector<std::vector<Word>> rels(comps);
  s->solver_gens.assign(comps, {});
  for (int j = 0; j < static_cast<int>(s->gens.size()); ++j) {
    int c = s->frame.component_of(s->gens[j].start);
    rels[c].push_back(s->frame.to_word(s->gens[j]));
    s->solver_gens[c].push_back(j);
  }
  for (int c = 0; c < comps; ++c)
    s->solvers.push_back(
        std::make_unique<NormalClosureSolver>(s->frame.num_generators(), std::move(rels[c])));
  HomotopyOracle h;
  h.s_ = s;
  return h;
}

HomotopyOracle HomotopyOracle::finite_cover(Covering c) {
  CoveringCheck chk = check_covering(c);
  if (!chk.ok) fail(ErrorCode::InvalidCovering, "invalid covering: " + chk.violation);
  if (!is_regular(c)) fail(ErrorCode::NotRegular, "cover oracle needs a regular covering");
  auto s = std::make_shared<State>();
  s->kind = Kind::FiniteCover;
  s->q = c.base;
  s->cover = std::move(c);
  s->lifts = LiftTable(s->cover);
  HomotopyOracle h;
  h.s_ = s;
  return h;
}

HomotopyOracle HomotopyOracle::abelian(const Quiver& q, std::vector<Walk> generators) {
  auto s = std::make_shared<State>();
  s->kind = Kind::AbelianQuotient;
  s->q = q;
  s->gens = checked_generators(q, std::move(generators));
  s->lattice = relator_lattice(q, s->gens);
  HomotopyOracle h;
  h.s_ = s;
  return h;
}

HomotopyOracle::Kind HomotopyOracle::kind() const { return s_->kind; }
const Quiver& HomotopyOracle::quiver() const { return s_->q; }
const std::vector<Walk>& HomotopyOracle::generators() const { return s_->gens; }
const Covering& HomotopyOracle::covering() const { return s_->cover; }
std::int64_t HomotopyOracle::search_bound() const { return s_->bound; }

bool HomotopyOracle::decides_exactly(VertexId v) const {
  switch (s_->kind) {
    case Kind::Generated: return s_->solvers[s_->frame.component_of(v)]->exact();
    default: return true;
  }
}

namespace {

void abelian_verdict(const SmithForm& lattice, const ZVector& target, Membership& m) {
  LatticeVerdict lv = lattice_membership(lattice, target);
  if (lv.member) {
    m.verdict = Verdict::In;
    m.certificate = Certificate::LatticeMember;
    m.coefficients = std::move(lv.coefficients);
  } else {
    m.verdict = Verdict::NotIn;
    m.certificate = Certificate::AbelianObstruction;
    m.character = std::move(lv.character);
    m.modulus = lv.modulus;
  }
}

}  // namespace

Membership HomotopyOracle::membership(const Walk& w) const {
  const State& s = *s_;
  validate_walk(s.q, w);
  if (!is_closed(s.q, w)) fail(ErrorCode::NotClosed, "membership needs a closed walk");
  Membership m;
  switch (s.kind) {
    case Kind::Trivial:
      if (reduce(w).trivial()) {
        m.verdict = Verdict::In;
        m.certificate = Certificate::TrivialWord;
      } else {
        m.verdict = Verdict::NotIn;
        m.certificate = Certificate::NonEmptyReducedWord;
      }
      return m;
    case Kind::Full:
      m.verdict = Verdict::In;
      m.certificate = Certificate::Full;
      return m;
    case Kind::FiniteCover: {
      std::vector<VertexId> fib = s.cover.fiber(w.start);
      m.lift_start = fib.front();
      m.lift_end = s.lifts.lift_endpoint(m.lift_start, w);
      bool closed = m.lift_end == m.lift_start;
      m.verdict = closed ? Verdict::In : Verdict::NotIn;
      m.certificate = closed ? Certificate::ClosedLift : Certificate::NonClosedLift;
      return m;
    }
    case Kind::AbelianQuotient:
      abelian_verdict(s.lattice, abelian_image(s.q, w), m);
      return m;
    case Kind::Generated:
      break;
  }

  if (reduce(w).trivial()) {
    m.verdict = Verdict::In;
    m.certificate = Certificate::TrivialWord;
    return m;
  }
  int comp = s.frame.component_of(w.start);
  const NormalClosureSolver& solver = *s.solvers[comp];
  Word z = s.frame.to_word(w);
  if (!solver.exact()) {
    abelian_verdict(s.lattice, abelian_image(s.q, w), m);
    if (m.verdict == Verdict::NotIn) return m;
    m = Membership{};
  }
  WordVerdict wv = solver.decide(z, solver.exact() ? 0 : s.bound);
  m.expansions = wv.expansions;
  if (wv.kind == WordVerdict::Kind::Unknown) return m;
  if (wv.kind == WordVerdict::Kind::NotIn) {
    m.verdict = Verdict::NotIn;
    m.certificate = Certificate::FreeImage;
    m.arrow_images.assign(s.q.num_arrows(), Word{});
    for (int i = 0; i < s.q.num_arrows(); ++i) {
      int g = s.frame.generator_of(s.q.arrows()[i].id);
      if (g >= 0 && s.frame.generator_component(g) == comp) m.arrow_images[i] = wv.free_image[g];
    }
    return m;
  }
  const Walk back = inverse(s.q, s.frame.tree_path(w.start));
  for (const Factor& f : wv.witness) {
    int gen = s.solver_gens[comp][f.relator];
    Walk u = s.frame.to_walk(f.conjugator, comp);
    Walk path = compose(s.q, s.frame.tree_path(s.gens[gen].start), compose(s.q, u, back));
    m.witness.push_back({path, gen, f.exponent});
  }
  m.verdict = Verdict::In;
  m.certificate = Certificate::Witness;
  return m;
}

namespace {

// Lift endpoint by scanning the total quiver directly (no lift tables).
VertexId naive_lift(const Covering& c, VertexId x, const Walk& w) {
  for (const Step& st : w.steps) {
    VertexId next = -1;
    for (std::size_t i = 0; i < c.total.arrows().size(); ++i) {
      const Arrow& a = c.total.arrows()[i];
      if (c.amap[i] != st.arrow) continue;
      if (st.sign > 0 && a.src == x) next = a.tgt;
      if (st.sign < 0 && a.tgt == x) next = a.src;
      if (next >= 0) break;
    }
    if (next < 0) return -1;
    x = next;
  }
  return x;
}

Word free_image_of(const Quiver& q, const Walk& w, const std::vector<Word>& images) {
  Word r;
  for (const Step& st : w.steps) {
    const Word& img = images[q.index_of(st.arrow)];
    r = word_mul(r, st.sign > 0 ? img : word_inverse(img));
  }
  return r;
}

mpz_class dot(const ZVector& a, const ZVector& b) {
  mpz_class r = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) r += a[i] * b[i];
  return r;
}

bool zero_mod(const mpz_class& x, const mpz_class& m) {
  if (sgn(m) == 0) return sgn(x) == 0;
  return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) != 0;
}

}  // namespace

bool verify_membership(const HomotopyOracle& h, const Walk& w, const Membership& m) {
  using K = HomotopyOracle::Kind;
  const Quiver& q = h.quiver();
  switch (m.certificate) {
    case Certificate::None: return m.verdict == Verdict::Unknown;
    case Certificate::Full: return m.verdict == Verdict::In && h.kind() == K::Full;
    case Certificate::TrivialWord: return m.verdict == Verdict::In && reduce(w).trivial();
    case Certificate::NonEmptyReducedWord:
      return m.verdict == Verdict::NotIn && h.kind() == K::Trivial && !reduce(w).trivial();
    case Certificate::Witness: {
      if (m.verdict != Verdict::In || h.kind() != K::Generated) return false;
      const auto& gens = h.generators();
      Walk acc = trivial_walk(w.start);
      for (const WalkFactor& f : m.witness) {
        if (f.generator < 0 || f.generator >= static_cast<int>(gens.size())) return false;
        const Walk& g = gens[f.generator];
        if (f.path.start != w.start || walk_target(q, f.path) != g.start) return false;
        try {
          validate_walk(q, f.path);
          Walk fw = compose(q, inverse(q, f.path), compose(q, power(q, g, f.exponent), f.path));
          acc = compose(q, fw, acc);
        } catch (const Error&) {
          return false;
        }
      }
      return reduce(acc) == reduce(w);
    }
    case Certificate::ClosedLift:
    case Certificate::NonClosedLift: {
      if (h.kind() != K::FiniteCover) return false;
      const Covering& c = h.covering();
      bool want = m.certificate == Certificate::ClosedLift;
      if ((m.verdict == Verdict::In) != want) return false;
      if (naive_lift(c, m.lift_start, w) != m.lift_end) return false;
      for (VertexId x : c.fiber(w.start)) {
        VertexId e = naive_lift(c, x, w);
        if (e < 0 || (e == x) != want) return false;
      }
      return true;
    }
    case Certificate::LatticeMember: {
      if (m.verdict != Verdict::In || h.kind() != K::AbelianQuotient) return false;
      const auto& gens = h.generators();
      if (m.coefficients.size() != gens.size()) return false;
      ZVector sum(q.num_arrows(), 0);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        ZVector a = abelian_image(q, gens[j]);
        for (int i = 0; i < q.num_arrows(); ++i) sum[i] += m.coefficients[j] * a[i];
      }
      return sum == abelian_image(q, w);
    }
    case Certificate::AbelianObstruction: {
      if (m.verdict != Verdict::NotIn) return false;
      if (h.kind() != K::Generated && h.kind() != K::AbelianQuotient) return false;
      for (const Walk& g : h.generators())
        if (!zero_mod(dot(m.character, abelian_image(q, g)), m.modulus)) return false;
      return !zero_mod(dot(m.character, abelian_image(q, w)), m.modulus);
    }
    case Certificate::FreeImage: {
      if (m.verdict != Verdict::NotIn || h.kind() != K::Generated) return false;
      if (static_cast<int>(m.arrow_images.size()) != q.num_arrows()) return false;
      for (const Walk& g : h.generators())
        if (!free_image_of(q, g, m.arrow_images).empty()) return false;
      return !free_image_of(q, w, m.arrow_images).empty();
    }
  }
  return false;
}

Tri exponent_two_quotient_check(const HomotopyOracle& h, const Quiver& q) {
  GroupoidFrame frame(q);
  bool unknown = false;
  auto test = [&](const Walk& w) {
    Verdict v = h.verdict(w);
    if (v == Verdict::Unknown) unknown = true;
    return v != Verdict::NotIn;
  };
  for (int g = 0; g < frame.num_generators(); ++g) {
    Walk gw = frame.generator_walk(g);
    if (!test(power(q, gw, 2))) return Tri::False;
  }
  for (int i = 0; i < frame.num_generators(); ++i)
    for (int j = i + 1; j < frame.num_generators(); ++j) {
      if (frame.generator_component(i) != frame.generator_component(j)) continue;
      Walk a = frame.generator_walk(i), b = frame.generator_walk(j);
      // a b a^{-1} b^{-1} in written order
      Walk comm = compose(q, a, compose(q, b, compose(q, inverse(q, a), inverse(q, b))));
      if (!test(comm)) return Tri::False;
    }
  return unknown ? Tri::Unknown : Tri::True;
}

}  // namespace hq
