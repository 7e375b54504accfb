#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "sigmapi/terms.hpp"

namespace sigmapi {

/// Pointed / copointed bits of one term, with witnesses.
///   point_witness   p : 1 -> cod  with  t = ! ; p
///   copoint_witness c : dom -> 0  with  t = c ; ?
struct Annotation {
  bool pointed = false;
  bool copointed = false;
  std::optional<Term> point_witness;
  std::optional<Term> copoint_witness;
};

namespace detail {
struct AnnNode;
}

/// A term with an Annotation at every node.
///
/// The builders keep annotations up to date in constant time per node, so a
/// term built bottom-up never needs a second pass.
class AnnotatedTerm {
 public:
  static AnnotatedTerm bang(ObjectType dom);
  static AnnotatedTerm quest(ObjectType cod);
  static AnnotatedTerm proj(int i, AnnotatedTerm body, ObjectType other);
  static AnnotatedTerm inj(int j, AnnotatedTerm body, ObjectType other);
  static AnnotatedTerm tuple(AnnotatedTerm left, AnnotatedTerm right);
  static AnnotatedTerm cotuple(AnnotatedTerm left, AnnotatedTerm right);
  static AnnotatedTerm gen_arrow(std::vector<std::string> path, ObjectType dom, ObjectType cod);

  const Term& term() const;
  const Annotation& annotation() const;
  bool pointed() const { return annotation().pointed; }
  bool copointed() const { return annotation().copointed; }
  /// Neither pointed nor copointed.
  bool definite() const { return !pointed() && !copointed(); }

  TermKind kind() const { return term().kind(); }
  int index() const { return term().index(); }
  std::size_t arity() const { return term().arity(); }
  const AnnotatedTerm& child(int k) const;
  const AnnotatedTerm& body() const { return child(0); }
  const ObjectType& dom() const { return term().dom(); }
  const ObjectType& cod() const { return term().cod(); }
  std::size_t size() const { return term().size(); }

  const detail::AnnNode* node() const { return node_.get(); }

 private:
  friend struct detail::AnnNode;
  friend AnnotatedTerm annotate_node(Term t, const AnnotatedTerm* kids);
  explicit AnnotatedTerm(std::nullptr_t) {}
  explicit AnnotatedTerm(std::shared_ptr<const detail::AnnNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::AnnNode> node_;
};

namespace detail {

struct AnnNode {
  explicit AnnNode(Term t) : term(std::move(t)), kids{AnnotatedTerm(nullptr), AnnotatedTerm(nullptr)} {}

  Term term;
  Annotation ann;
  AnnotatedTerm kids[2];

  // Derived terms filled on first use by the decision procedure:
  // 0,1 restriction along s_k on the domain; 2,3 along p_k on the codomain;
  // 4,5 factor through s_j; 6,7 factor through p_i.
  enum Slot { DomRestrict = 0, CodRestrict = 2, FactorInj = 4, FactorProj = 6 };
  mutable std::array<std::once_flag, 8> once;
  mutable std::array<std::optional<AnnotatedTerm>, 8> derived;
  mutable std::array<std::atomic<bool>, 8> ready{};

  /// The slot, computed by `make` on first use.
  template <class F>
  const std::optional<AnnotatedTerm>& cached(int slot, F&& make) const {
    if (!ready[slot].load(std::memory_order_acquire))
      std::call_once(once[slot], [&] {
        derived[slot] = make();
        ready[slot].store(true, std::memory_order_release);
      });
    return derived[slot];
  }
};

}  // namespace detail

inline const Term& AnnotatedTerm::term() const { return node_->term; }
inline const Annotation& AnnotatedTerm::annotation() const { return node_->ann; }
/// Builds the node for `t` from already annotated children (constant time).
AnnotatedTerm annotate_node(Term t, const AnnotatedTerm* kids);

/// One bottom-up pass over `t`. When `visits` is given it is increased by the
/// number of nodes visited, which is size(t) for generator-free terms.
AnnotatedTerm annotate(const Term& t, std::size_t* visits = nullptr);

/// Annotates terms that share subterms, reusing the node of every subterm
/// seen before. The cache keeps the terms it has seen alive.
class AnnotationCache {
 public:
  AnnotatedTerm get(const Term& t);
  std::size_t size() const { return map_.size(); }
  void clear() { map_.clear(); }

 private:
  std::unordered_map<const detail::TermNode*, AnnotatedTerm> map_;
};

/// A point 1 -> t; index 0 wins when both summands are pointed.
std::optional<Term> point_of(const ObjectType& t);
/// A copoint t -> 0; index 0 wins when both factors are copointed.
std::optional<Term> copoint_of(const ObjectType& t);

/// The unique arrow dom -> cod that is pointed and copointed, if any:
/// copoint_of(dom) ; ? ; point_of(cod) after cut elimination.
std::optional<Term> disconnect(const ObjectType& dom, const ObjectType& cod);

/// c ; ?_A for a copoint c : X -> 0, without going through the general composer.
Term retarget_copoint(const Term& c, const ObjectType& cod);
/// !_X ; p for a point p : 1 -> A.
Term redomain_point(const Term& p, const ObjectType& dom);

}  // namespace sigmapi
