#include "sigmapi/factor.hpp"

#include <stdexcept>

namespace sigmapi {

using detail::AnnNode;

namespace {

std::optional<AnnotatedTerm> inj_uncached(const AnnotatedTerm& f, int j, std::size_t* visits);
std::optional<AnnotatedTerm> proj_uncached(const AnnotatedTerm& f, int i, std::size_t* visits);

std::optional<AnnotatedTerm> through_copoint(const AnnotatedTerm& f, const ObjectType& cod) {
  return annotate(retarget_copoint(*f.annotation().copoint_witness, cod));
}

std::optional<AnnotatedTerm> through_point(const AnnotatedTerm& f, const ObjectType& dom) {
  return annotate(redomain_point(*f.annotation().point_witness, dom));
}

std::optional<AnnotatedTerm> inj_cached(const AnnotatedTerm& f, int j, std::size_t* visits) {
  const AnnNode* n = f.node();
  return n->cached(AnnNode::FactorInj + j, [&] { return inj_uncached(f, j, visits); });
}

std::optional<AnnotatedTerm> proj_cached(const AnnotatedTerm& f, int i, std::size_t* visits) {
  const AnnNode* n = f.node();
  return n->cached(AnnNode::FactorProj + i, [&] { return proj_uncached(f, i, visits); });
}

std::optional<AnnotatedTerm> inj_uncached(const AnnotatedTerm& f, int j, std::size_t* visits) {
  if (visits) ++*visits;
  const ObjectType& target = f.cod().operand(j);
  switch (f.kind()) {
    case TermKind::Inj:
      if (f.index() == j) return f.body();
      if (f.copointed()) return through_copoint(f, target);
      return std::nullopt;
    case TermKind::Cotuple: {
      auto a = inj_cached(f.child(0), j, visits);
      if (!a) return std::nullopt;
      auto b = inj_cached(f.child(1), j, visits);
      if (!b) return std::nullopt;
      return AnnotatedTerm::cotuple(*a, *b);
    }
    case TermKind::Proj: {
      if (f.copointed()) return through_copoint(f, target);
      auto b = inj_cached(f.body(), j, visits);
      if (!b) return std::nullopt;
      return AnnotatedTerm::proj(f.index(), *b, f.dom().operand(1 - f.index()));
    }
    case TermKind::Quest: return AnnotatedTerm::quest(target);
    default: break;
  }
  throw std::logic_error("factor_inj: unexpected term " + f.term().to_string());
}

std::optional<AnnotatedTerm> proj_uncached(const AnnotatedTerm& f, int i, std::size_t* visits) {
  if (visits) ++*visits;
  const ObjectType& source = f.dom().operand(i);
  switch (f.kind()) {
    case TermKind::Proj:
      if (f.index() == i) return f.body();
      if (f.pointed()) return through_point(f, source);
      return std::nullopt;
    case TermKind::Tuple: {
      auto a = proj_cached(f.child(0), i, visits);
      if (!a) return std::nullopt;
      auto b = proj_cached(f.child(1), i, visits);
      if (!b) return std::nullopt;
      return AnnotatedTerm::tuple(*a, *b);
    }
    case TermKind::Inj: {
      if (f.pointed()) return through_point(f, source);
      auto b = proj_cached(f.body(), i, visits);
      if (!b) return std::nullopt;
      return AnnotatedTerm::inj(f.index(), *b, f.cod().operand(1 - f.index()));
    }
    case TermKind::Bang: return AnnotatedTerm::bang(source);
    default: break;
  }
  throw std::logic_error("factor_proj: unexpected term " + f.term().to_string());
}

}  // namespace

std::optional<AnnotatedTerm> factor_inj(const AnnotatedTerm& f, int j, std::size_t* visits) {
  if (!f.cod().is_sum())
    throw std::invalid_argument("factor_inj needs a sum codomain, got " + f.cod().to_string());
  return inj_cached(f, j & 1, visits);
}

std::optional<AnnotatedTerm> factor_proj(const AnnotatedTerm& f, int i, std::size_t* visits) {
  if (!f.dom().is_prod())
    throw std::invalid_argument("factor_proj needs a product domain, got " + f.dom().to_string());
  return proj_cached(f, i & 1, visits);
}

}  // namespace sigmapi
