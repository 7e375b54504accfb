#include "sigmapi/compose.hpp"

#include <stdexcept>

namespace sigmapi {

namespace {

// Cut-free terms that may still contain identities, so that id ; f -> f can fire.
struct ENode;
using E = std::shared_ptr<const ENode>;

struct ENode {
  RawKind kind;
  int index = 0;
  E kids[2];
  std::vector<std::string> path;
  ObjectType dom;
  ObjectType cod;
};

E node(RawKind k, ObjectType dom, ObjectType cod, int index = 0, E a = nullptr, E b = nullptr) {
  auto n = std::make_shared<ENode>();
  n->kind = k;
  n->index = index;
  n->kids[0] = std::move(a);
  n->kids[1] = std::move(b);
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  return n;
}

E from_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Bang: return node(RawKind::Bang, t.dom(), t.cod());
    case TermKind::Quest: return node(RawKind::Quest, t.dom(), t.cod());
    case TermKind::Proj: return node(RawKind::Proj, t.dom(), t.cod(), t.index(), from_term(t.body()));
    case TermKind::Inj: return node(RawKind::Inj, t.dom(), t.cod(), t.index(), from_term(t.body()));
    case TermKind::Tuple:
      return node(RawKind::Tuple, t.dom(), t.cod(), 0, from_term(t.child(0)), from_term(t.child(1)));
    case TermKind::Cotuple:
      return node(RawKind::Cotuple, t.dom(), t.cod(), 0, from_term(t.child(0)), from_term(t.child(1)));
    case TermKind::GenArrow: {
      auto n = node(RawKind::GenArrow, t.dom(), t.cod());
      std::const_pointer_cast<ENode>(n)->path = t.path();
      return n;
    }
  }
  return nullptr;
}

E cut(const E& f, const E& g) {
  const ObjectType& X = f->dom;
  const ObjectType& A = g->cod;
  if (f->kind == RawKind::Id) return g;
  if (g->kind == RawKind::Id) return f;
  if (f->kind == RawKind::Quest) return node(RawKind::Quest, X, A);
  if (g->kind == RawKind::Bang) return node(RawKind::Bang, X, A);

  if (f->kind == RawKind::Tuple && g->kind == RawKind::Proj) return cut(f->kids[g->index], g->kids[0]);
  if (f->kind == RawKind::Inj && g->kind == RawKind::Cotuple) return cut(f->kids[0], g->kids[f->index]);
  if (f->kind == RawKind::GenArrow && g->kind == RawKind::GenArrow) {
    auto n = std::const_pointer_cast<ENode>(node(RawKind::GenArrow, X, A));
    n->path = f->path;
    n->path.insert(n->path.end(), g->path.begin(), g->path.end());
    return n;
  }

  if (g->kind == RawKind::Inj) return node(RawKind::Inj, X, A, g->index, cut(f, g->kids[0]));
  if (g->kind == RawKind::Tuple) return node(RawKind::Tuple, X, A, 0, cut(f, g->kids[0]), cut(f, g->kids[1]));

  if (f->kind == RawKind::Proj) return node(RawKind::Proj, X, A, f->index, cut(f->kids[0], g));
  if (f->kind == RawKind::Cotuple)
    return node(RawKind::Cotuple, X, A, 0, cut(f->kids[0], g), cut(f->kids[1], g));

  throw std::logic_error("cut elimination: no rule for " + f->dom.to_string() + " -> " + f->cod.to_string() +
                         " ; " + g->dom.to_string() + " -> " + g->cod.to_string());
}

E from_raw(const RawTerm& r) {
  if (!r.typed()) throw std::logic_error("eliminate needs a typed raw term");
  switch (r.kind) {
    case RawKind::Bang:
    case RawKind::Quest: return node(r.kind, *r.dom, *r.cod);
    case RawKind::Proj:
    case RawKind::Inj: return node(r.kind, *r.dom, *r.cod, r.index, from_raw(r.children[0]));
    case RawKind::Tuple:
    case RawKind::Cotuple:
      return node(r.kind, *r.dom, *r.cod, 0, from_raw(r.children[0]), from_raw(r.children[1]));
    case RawKind::GenArrow: {
      auto n = std::const_pointer_cast<ENode>(node(r.kind, *r.dom, *r.cod));
      n->path = r.path;
      return n;
    }
    case RawKind::Id: return node(RawKind::Id, *r.dom, *r.cod);
    case RawKind::Cut: return cut(from_raw(r.children[0]), from_raw(r.children[1]));
  }
  return nullptr;
}

Term to_term(const E& e) {
  switch (e->kind) {
    case RawKind::Bang: return Term::bang(e->dom);
    case RawKind::Quest: return Term::quest(e->cod);
    case RawKind::Proj: return Term::proj(e->index, to_term(e->kids[0]), e->dom.operand(1 - e->index));
    case RawKind::Inj: return Term::inj(e->index, to_term(e->kids[0]), e->cod.operand(1 - e->index));
    case RawKind::Tuple: return Term::tuple(to_term(e->kids[0]), to_term(e->kids[1]));
    case RawKind::Cotuple: return Term::cotuple(to_term(e->kids[0]), to_term(e->kids[1]));
    case RawKind::GenArrow: return Term::gen_arrow(e->path, e->dom, e->cod);
    case RawKind::Id: return identity(e->dom);
    case RawKind::Cut: break;
  }
  throw std::logic_error("cut left after elimination");
}

}  // namespace

Term eliminate(const RawTerm& typed) { return to_term(from_raw(typed)); }

Term compose(const Term& f, const Term& g) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("cannot compose " + f.dom().to_string() + " -> " + f.cod().to_string() + " with " +
                                g.dom().to_string() + " -> " + g.cod().to_string());
  return to_term(cut(from_term(f), from_term(g)));
}

Term identity(const ObjectType& t) {
  switch (t.kind()) {
    case TypeKind::Zero: return Term::quest(t);
    case TypeKind::One: return Term::bang(t);
    case TypeKind::Gen: return Term::gen_arrow({}, t, t);
    case TypeKind::Prod: {
      Term a = identity(t.left()), b = identity(t.right());
      Term l = a.kind() == TermKind::Bang ? Term::bang(t) : Term::proj(0, a, t.right());
      Term r = b.kind() == TermKind::Bang ? Term::bang(t) : Term::proj(1, b, t.left());
      return Term::tuple(l, r);
    }
    case TypeKind::Sum: {
      Term a = identity(t.left()), b = identity(t.right());
      Term l = a.kind() == TermKind::Quest ? Term::quest(t) : Term::inj(0, a, t.right());
      Term r = b.kind() == TermKind::Quest ? Term::quest(t) : Term::inj(1, b, t.left());
      return Term::cotuple(l, r);
    }
  }
  throw std::logic_error("identity: unknown type kind");
}

Term check_term(const RawTerm& raw, const ObjectType& dom, const ObjectType& cod, const GeneratorGraph& graph) {
  return eliminate(infer(raw, dom, cod, graph));
}

}  // namespace sigmapi
