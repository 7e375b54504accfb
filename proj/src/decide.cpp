#include "sigmapi/decide.hpp"

#include <stdexcept>

#include "sigmapi/factor.hpp"

namespace sigmapi {

using detail::AnnNode;

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Equal: return "Equal";
    case Outcome::NotEqual: return "NotEqual";
    case Outcome::RequiresOracle: return "RequiresOracle";
  }
  return "?";
}

const char* witness_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Disconnect: return "disconnect";
    case WitnessKind::SharedPoint: return "shared-point";
    case WitnessKind::SharedCopoint: return "shared-copoint";
    case WitnessKind::Bouncer: return "bouncer";
    case WitnessKind::SyntacticRecursion: return "syntactic-recursion";
  }
  return "?";
}

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::CornerMismatch: return "corner-mismatch";
    case Reason::PointMismatch: return "point-mismatch";
    case Reason::CopointMismatch: return "copoint-mismatch";
    case Reason::LiftFailure: return "lift-failure";
  }
  return "?";
}

std::string Verdict::tag() const {
  if (outcome != Outcome::NotEqual) return "";
  if (!components.empty()) return "component " + std::to_string(components.front());
  return reason_name(reason);
}

std::string Verdict::to_string() const {
  std::string s = outcome_name(outcome);
  if (outcome == Outcome::Equal && witness) s += std::string(" (") + witness_name(witness->kind) + ")";
  if (outcome == Outcome::NotEqual) {
    s += " (";
    for (int k : components) s += "component " + std::to_string(k) + ": ";
    s += reason_name(reason);
    s += ")";
  }
  return s;
}

bool injection_monic(const ObjectType& sum, int j) {
  return !sum.operand(1 - j).pointed() || sum.operand(j).pointed();
}

bool projection_epic(const ObjectType& prod, int i) {
  return !prod.operand(1 - i).copointed() || prod.operand(i).copointed();
}

namespace {

AnnotatedTerm dom_uncached(const AnnotatedTerm& f, int k, std::size_t* visits) {
  if (visits) ++*visits;
  switch (f.kind()) {
    case TermKind::Cotuple: return f.child(k);
    case TermKind::Inj:
      return AnnotatedTerm::inj(f.index(), restrict_dom(f.body(), k, visits), f.cod().operand(1 - f.index()));
    case TermKind::Tuple:
      return AnnotatedTerm::tuple(restrict_dom(f.child(0), k, visits), restrict_dom(f.child(1), k, visits));
    case TermKind::Bang: return AnnotatedTerm::bang(f.dom().operand(k));
    default: break;
  }
  throw std::logic_error("restrict_dom: unexpected term " + f.term().to_string());
}

AnnotatedTerm cod_uncached(const AnnotatedTerm& f, int k, std::size_t* visits) {
  if (visits) ++*visits;
  switch (f.kind()) {
    case TermKind::Tuple: return f.child(k);
    case TermKind::Proj:
      return AnnotatedTerm::proj(f.index(), restrict_cod(f.body(), k, visits), f.dom().operand(1 - f.index()));
    case TermKind::Cotuple:
      return AnnotatedTerm::cotuple(restrict_cod(f.child(0), k, visits), restrict_cod(f.child(1), k, visits));
    case TermKind::Quest: return AnnotatedTerm::quest(f.cod().operand(k));
    default: break;
  }
  throw std::logic_error("restrict_cod: unexpected term " + f.term().to_string());
}

Verdict equal_verdict(WitnessKind kind, std::optional<Term> term = std::nullopt) {
  Verdict v;
  v.witness = Witness{kind, std::move(term)};
  return v;
}

Verdict not_equal(Reason r) {
  Verdict v;
  v.outcome = Outcome::NotEqual;
  v.reason = r;
  return v;
}

Verdict requires_oracle() {
  Verdict v;
  v.outcome = Outcome::RequiresOracle;
  return v;
}

Verdict decide(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats& st);

// f = s_j f0, g = p_i g0.
Verdict bounce(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats& st, bool fallback) {
  ++st.calls;
  int j = f.index();
  int i = g.index();
  auto h1 = factor_proj(f.body(), i, &st.visits);
  auto h2 = h1 ? factor_inj(g.body(), j, &st.visits) : std::nullopt;
  if (h1 && h2) {
    Verdict v = decide(*h1, *h2, st);
    if (v.equal()) {
      const AnnotatedTerm& h = injection_monic(f.cod(), j) ? *h2 : *h1;
      return equal_verdict(WitnessKind::Bouncer, h.term());
    }
    if (!fallback) return v;
  }
  if (fallback) return decide(f, g, st);
  return not_equal(Reason::LiftFailure);
}

Verdict split(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats& st, bool on_domain) {
  for (int k = 0; k < 2; ++k) {
    const AnnotatedTerm& fk = on_domain ? restrict_dom(f, k, &st.visits) : restrict_cod(f, k, &st.visits);
    const AnnotatedTerm& gk = on_domain ? restrict_dom(g, k, &st.visits) : restrict_cod(g, k, &st.visits);
    Verdict v = decide(fk, gk, st);
    if (!v.equal()) {
      if (v.outcome == Outcome::NotEqual) v.components.insert(v.components.begin(), k);
      return v;
    }
  }
  return equal_verdict(WitnessKind::SyntacticRecursion);
}

Verdict decide(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats& st) {
  ++st.calls;
  const ObjectType& X = f.dom();
  const ObjectType& A = f.cod();
  if (X.is_zero() || A.is_one()) return equal_verdict(WitnessKind::SyntacticRecursion);
  if (f.node() == g.node() || f.term() == g.term()) return equal_verdict(WitnessKind::SyntacticRecursion);

  if (X.is_sum()) return split(f, g, st, true);
  if (A.is_prod()) return split(f, g, st, false);

  if (X.is_one() || A.is_zero()) {
    // Points 1 -> A0 + A1 are injections and copoints X0 * X1 -> 0 are
    // projections; neither is touched by any equation but structurally.
    if (f.index() != g.index()) return not_equal(Reason::CornerMismatch);
    return decide(f.body(), g.body(), st);
  }

  // X0 * X1 -> A0 + A1
  if (f.pointed() != g.pointed()) return not_equal(Reason::PointMismatch);
  if (f.copointed() != g.copointed()) return not_equal(Reason::CopointMismatch);
  if (f.pointed() && f.copointed()) return equal_verdict(WitnessKind::Disconnect, f.term());
  if (f.pointed()) {
    const Term& p = *f.annotation().point_witness;
    st.visits += p.size();
    if (p == *g.annotation().point_witness) return equal_verdict(WitnessKind::SharedPoint, p);
    return not_equal(Reason::PointMismatch);
  }
  if (f.copointed()) {
    const Term& c = *f.annotation().copoint_witness;
    st.visits += c.size();
    if (c == *g.annotation().copoint_witness) return equal_verdict(WitnessKind::SharedCopoint, c);
    return not_equal(Reason::CopointMismatch);
  }

  // Definite maps with the same outer constructor and index are equal
  // exactly when their bodies are.
  if (f.kind() == g.kind()) {
    if (f.index() != g.index()) return not_equal(Reason::CornerMismatch);
    return decide(f.body(), g.body(), st);
  }
  if (f.kind() == TermKind::Inj) return bounce(f, g, st, false);
  return bounce(g, f, st, false);
}

void check_parallel(const Term& f, const Term& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw std::invalid_argument("terms are not parallel: " + f.dom().to_string() + " -> " + f.cod().to_string() +
                                " vs " + g.dom().to_string() + " -> " + g.cod().to_string());
}

}  // namespace

const AnnotatedTerm& restrict_dom(const AnnotatedTerm& f, int k, std::size_t* visits) {
  if (!f.dom().is_sum()) throw std::invalid_argument("restrict_dom needs a sum domain");
  const AnnNode* n = f.node();
  int slot = AnnNode::DomRestrict + (k & 1);
  return *n->cached(slot, [&] { return dom_uncached(f, k & 1, visits); });
}

const AnnotatedTerm& restrict_cod(const AnnotatedTerm& f, int k, std::size_t* visits) {
  if (!f.cod().is_prod()) throw std::invalid_argument("restrict_cod needs a product codomain");
  const AnnNode* n = f.node();
  int slot = AnnNode::CodRestrict + (k & 1);
  return *n->cached(slot, [&] { return cod_uncached(f, k & 1, visits); });
}

Verdict equal(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats* stats) {
  check_parallel(f.term(), g.term());
  if (f.term().has_generators() || g.term().has_generators()) return requires_oracle();
  DecideStats local;
  return decide(f, g, stats ? *stats : local);
}

Verdict equal(const Term& f, const Term& g, DecideStats* stats) {
  check_parallel(f, g);
  if (f.has_generators() || g.has_generators()) return requires_oracle();
  std::size_t* visits = stats ? &stats->visits : nullptr;
  AnnotatedTerm af = annotate(f, visits);
  AnnotatedTerm ag = annotate(g, visits);
  return equal(af, ag, stats);
}

Verdict equivalent(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats* stats) {
  check_parallel(f.term(), g.term());
  if (f.kind() != TermKind::Inj || g.kind() != TermKind::Proj)
    throw std::invalid_argument("equivalent needs an injection on the left and a projection on the right");
  if (f.term().has_generators() || g.term().has_generators()) return requires_oracle();
  DecideStats local;
  DecideStats& st = stats ? *stats : local;
  return bounce(f, g, st, !f.definite() || !g.definite());
}

DecideResult decide_with_stats(const Term& f, const Term& g) {
  DecideResult r;
  r.verdict = equal(f, g, &r.stats);
  return r;
}

}  // namespace sigmapi
