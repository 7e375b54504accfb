#include "sigmapi/annotate.hpp"

#include <stdexcept>

namespace sigmapi {

using detail::AnnNode;

const AnnotatedTerm& AnnotatedTerm::child(int k) const {
  if (static_cast<std::size_t>(k) >= arity()) throw std::logic_error("annotated term has no such child");
  return node_->kids[k];
}

std::optional<Term> point_of(const ObjectType& t) {
  const auto* n = t.node();
  std::call_once(n->point_once, [&] {
    std::optional<Term> p;
    switch (t.kind()) {
      case TypeKind::One: p = Term::bang(t); break;
      case TypeKind::Sum:
        for (int j = 0; j < 2 && !p; ++j)
          if (auto q = point_of(t.operand(j))) p = Term::inj(j, *q, t.operand(1 - j));
        break;
      case TypeKind::Prod: {
        auto a = point_of(t.left());
        auto b = a ? point_of(t.right()) : std::nullopt;
        if (a && b) p = Term::tuple(*a, *b);
        break;
      }
      default: break;
    }
    if (p) n->point_witness = p->node_ptr();
  });
  if (!n->point_witness) return std::nullopt;
  return Term::from_node(n->point_witness);
}

std::optional<Term> copoint_of(const ObjectType& t) {
  const auto* n = t.node();
  std::call_once(n->copoint_once, [&] {
    std::optional<Term> c;
    switch (t.kind()) {
      case TypeKind::Zero: c = Term::quest(t); break;
      case TypeKind::Prod:
        for (int i = 0; i < 2 && !c; ++i)
          if (auto q = copoint_of(t.operand(i))) c = Term::proj(i, *q, t.operand(1 - i));
        break;
      case TypeKind::Sum: {
        auto a = copoint_of(t.left());
        auto b = a ? copoint_of(t.right()) : std::nullopt;
        if (a && b) c = Term::cotuple(*a, *b);
        break;
      }
      default: break;
    }
    if (c) n->copoint_witness = c->node_ptr();
  });
  if (!n->copoint_witness) return std::nullopt;
  return Term::from_node(n->copoint_witness);
}

Term retarget_copoint(const Term& c, const ObjectType& cod) {
  switch (c.kind()) {
    case TermKind::Quest: return Term::quest(cod);
    case TermKind::Proj:
      return Term::proj(c.index(), retarget_copoint(c.body(), cod), c.dom().operand(1 - c.index()));
    case TermKind::Cotuple: return Term::cotuple(retarget_copoint(c.child(0), cod), retarget_copoint(c.child(1), cod));
    default: throw std::logic_error("retarget_copoint: not a copoint: " + c.to_string());
  }
}

Term redomain_point(const Term& p, const ObjectType& dom) {
  switch (p.kind()) {
    case TermKind::Bang: return Term::bang(dom);
    case TermKind::Inj:
      return Term::inj(p.index(), redomain_point(p.body(), dom), p.cod().operand(1 - p.index()));
    case TermKind::Tuple: return Term::tuple(redomain_point(p.child(0), dom), redomain_point(p.child(1), dom));
    default: throw std::logic_error("redomain_point: not a point: " + p.to_string());
  }
}

std::optional<Term> disconnect(const ObjectType& dom, const ObjectType& cod) {
  if (!dom.copointed() || !cod.pointed()) return std::nullopt;
  return retarget_copoint(*copoint_of(dom), cod);
}

namespace {

const Term& unit_point() {
  static const Term t = Term::bang(ObjectType::one());
  return t;
}

const Term& unit_copoint() {
  static const Term t = Term::quest(ObjectType::zero());
  return t;
}

Annotation rule(const Term& t, const AnnotatedTerm* kids) {
  Annotation a;
  switch (t.kind()) {
    case TermKind::Bang:
      a.pointed = true;
      a.point_witness = unit_point();
      if (t.dom().copointed()) {
        a.copointed = true;
        a.copoint_witness = copoint_of(t.dom());
      }
      break;
    case TermKind::Quest:
      a.copointed = true;
      a.copoint_witness = unit_copoint();
      if (t.cod().pointed()) {
        a.pointed = true;
        a.point_witness = point_of(t.cod());
      }
      break;
    case TermKind::Inj: {
      // s_j b is pointed through b, or, when b is copointed, through any point
      // of the other summand.
      int j = t.index();
      const Annotation& b = kids[0].annotation();
      const ObjectType& other = t.cod().operand(1 - j);
      if (b.pointed) {
        a.pointed = true;
        a.point_witness = Term::inj(j, *b.point_witness, other);
      } else if (b.copointed && other.pointed()) {
        a.pointed = true;
        a.point_witness = Term::inj(1 - j, *point_of(other), t.cod().operand(j));
      }
      a.copointed = b.copointed;
      a.copoint_witness = b.copoint_witness;
      break;
    }
    case TermKind::Proj: {
      int i = t.index();
      const Annotation& b = kids[0].annotation();
      const ObjectType& other = t.dom().operand(1 - i);
      a.pointed = b.pointed;
      a.point_witness = b.point_witness;
      if (b.copointed) {
        a.copointed = true;
        a.copoint_witness = Term::proj(i, *b.copoint_witness, other);
      } else if (b.pointed && other.copointed()) {
        a.copointed = true;
        a.copoint_witness = Term::proj(1 - i, *copoint_of(other), t.dom().operand(i));
      }
      break;
    }
    case TermKind::Tuple: {
      const Annotation& l = kids[0].annotation();
      const Annotation& r = kids[1].annotation();
      if (l.pointed && r.pointed) {
        a.pointed = true;
        a.point_witness = Term::tuple(*l.point_witness, *r.point_witness);
      }
      // Both copointed: one copoint serves both components unless they disagree
      // and neither component is a disconnect.
      if (l.copointed && r.copointed) {
        bool lp = t.cod().left().pointed();
        if (lp || t.cod().right().pointed() || *l.copoint_witness == *r.copoint_witness) {
          a.copointed = true;
          a.copoint_witness = lp ? r.copoint_witness : l.copoint_witness;
        }
      }
      break;
    }
    case TermKind::Cotuple: {
      const Annotation& l = kids[0].annotation();
      const Annotation& r = kids[1].annotation();
      if (l.copointed && r.copointed) {
        a.copointed = true;
        a.copoint_witness = Term::cotuple(*l.copoint_witness, *r.copoint_witness);
      }
      if (l.pointed && r.pointed) {
        bool lc = t.dom().left().copointed();
        if (lc || t.dom().right().copointed() || *l.point_witness == *r.point_witness) {
          a.pointed = true;
          a.point_witness = lc ? r.point_witness : l.point_witness;
        }
      }
      break;
    }
    case TermKind::GenArrow: break;
  }
  return a;
}

}  // namespace

AnnotatedTerm annotate_node(Term t, const AnnotatedTerm* kids) {
  std::size_t n = t.arity();
  auto node = std::make_shared<AnnNode>(std::move(t));
  for (std::size_t k = 0; k < n; ++k) node->kids[k] = kids[k];
  node->ann = rule(node->term, node->kids);
  return AnnotatedTerm(std::move(node));
}

AnnotatedTerm AnnotatedTerm::bang(ObjectType dom) { return annotate_node(Term::bang(std::move(dom)), nullptr); }
AnnotatedTerm AnnotatedTerm::quest(ObjectType cod) { return annotate_node(Term::quest(std::move(cod)), nullptr); }

AnnotatedTerm AnnotatedTerm::proj(int i, AnnotatedTerm body, ObjectType other) {
  Term t = Term::proj(i, body.term(), std::move(other));
  return annotate_node(std::move(t), &body);
}

AnnotatedTerm AnnotatedTerm::inj(int j, AnnotatedTerm body, ObjectType other) {
  Term t = Term::inj(j, body.term(), std::move(other));
  return annotate_node(std::move(t), &body);
}

AnnotatedTerm AnnotatedTerm::tuple(AnnotatedTerm left, AnnotatedTerm right) {
  Term t = Term::tuple(left.term(), right.term());
  AnnotatedTerm kids[2] = {std::move(left), std::move(right)};
  return annotate_node(std::move(t), kids);
}

AnnotatedTerm AnnotatedTerm::cotuple(AnnotatedTerm left, AnnotatedTerm right) {
  Term t = Term::cotuple(left.term(), right.term());
  AnnotatedTerm kids[2] = {std::move(left), std::move(right)};
  return annotate_node(std::move(t), kids);
}

AnnotatedTerm AnnotatedTerm::gen_arrow(std::vector<std::string> path, ObjectType dom, ObjectType cod) {
  return annotate_node(Term::gen_arrow(std::move(path), std::move(dom), std::move(cod)), nullptr);
}

AnnotatedTerm annotate(const Term& t, std::size_t* visits) {
  if (visits) ++*visits;
  switch (t.arity()) {
    case 0: return annotate_node(t, nullptr);
    case 1: {
      AnnotatedTerm k = annotate(t.child(0), visits);
      return annotate_node(t, &k);
    }
    default: {
      AnnotatedTerm l = annotate(t.child(0), visits);
      AnnotatedTerm r = annotate(t.child(1), visits);
      AnnotatedTerm kids[2] = {std::move(l), std::move(r)};
      return annotate_node(t, kids);
    }
  }
}

AnnotatedTerm AnnotationCache::get(const Term& t) {
  auto it = map_.find(t.node());
  if (it != map_.end()) return it->second;
  AnnotatedTerm out = [&] {
    switch (t.arity()) {
      case 0: return annotate_node(t, nullptr);
      case 1: {
        AnnotatedTerm k = get(t.child(0));
        return annotate_node(t, &k);
      }
      default: {
        AnnotatedTerm kids[2] = {get(t.child(0)), get(t.child(1))};
        return annotate_node(t, kids);
      }
    }
  }();
  map_.emplace(t.node(), out);
  return out;
}

}  // namespace sigmapi
