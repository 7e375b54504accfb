#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigmapi/graph.hpp"
#include "sigmapi/types.hpp"

namespace sigmapi {

/// Constructors of cut-free proof terms. The order is the enumeration order.
enum class TermKind : std::uint8_t { Bang, Quest, Proj, Inj, Tuple, Cotuple, GenArrow };

const char* kind_name(TermKind k);

/// A typed, cut-free and identity-free proof term.
///
///   !          : X -> 1
///   ?          : 0 -> A
///   p_i f      : X0 * X1 -> A      for f : X_i -> A
///   s_j f      : X -> A0 + A1      for f : X -> A_j
///   <f, g>     : X -> A * B
///   {f, g}     : X + Y -> A
///   @[k, ...]  : x -> y            for a generator edge path from x to y
///
/// Every node records its homset, so the typing of any subterm is available
/// in constant time. Terms are immutable and share structure freely.
class Term {
 public:
  static Term bang(ObjectType dom);
  static Term quest(ObjectType cod);
  /// p_i(body) : X0 * X1 -> cod(body) where X_i = dom(body) and X_{1-i} = other.
  static Term proj(int i, Term body, ObjectType other);
  /// s_j(body) : dom(body) -> A0 + A1 where A_j = cod(body) and A_{1-j} = other.
  static Term inj(int j, Term body, ObjectType other);
  static Term tuple(Term left, Term right);
  static Term cotuple(Term left, Term right);
  /// A generator arrow; `dom` and `cod` must be generator types. An empty
  /// path is the identity on its node and needs dom == cod.
  static Term gen_arrow(std::vector<std::string> path, ObjectType dom, ObjectType cod);

  TermKind kind() const;
  /// Projection / injection index; 0 for other kinds.
  int index() const;
  std::size_t arity() const;
  const Term& child(int k) const;
  const Term& body() const { return child(0); }
  const std::vector<std::string>& path() const;

  const ObjectType& dom() const;
  const ObjectType& cod() const;

  std::size_t size() const;
  std::size_t height() const;
  std::uint64_t hash() const;
  bool has_generators() const;

  std::string to_string() const;

  const detail::TermNode* node() const { return node_.get(); }
  const std::shared_ptr<const detail::TermNode>& node_ptr() const { return node_; }
  static Term from_node(std::shared_ptr<const detail::TermNode> node);

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  friend class detail::TermNode;
  explicit Term(std::nullptr_t) {}
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

namespace detail {

class TermNode {
 public:
  TermNode() : kids{Term(nullptr), Term(nullptr)} {}

  TermKind kind = TermKind::Bang;
  std::uint8_t index = 0;
  bool has_generators = false;
  Term kids[2];
  std::vector<std::string> path;
  ObjectType dom;
  ObjectType cod;
  std::uint32_t size = 1;
  std::uint32_t height = 1;
  std::uint64_t hash = 0;
};

}  // namespace detail

inline TermKind Term::kind() const { return node_->kind; }
inline int Term::index() const { return node_->index; }
inline const ObjectType& Term::dom() const { return node_->dom; }
inline const ObjectType& Term::cod() const { return node_->cod; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::height() const { return node_->height; }
inline std::uint64_t Term::hash() const { return node_->hash; }
inline bool Term::has_generators() const { return node_->has_generators; }

/// Size and height of a term: leaves count 1, every constructor adds one node;
/// a generator arrow has size 1 + path length and height 1.
TypeMetrics term_metrics(const Term& t);

/// Surface syntax position (1-based; 0 when unknown).
struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class RawKind : std::uint8_t { Bang, Quest, Proj, Inj, Tuple, Cotuple, GenArrow, Id, Cut };

/// Surface term: the cut-free constructors plus identities and cuts. After
/// `infer` every node carries its homset in `dom` / `cod`.
struct RawTerm {
  RawKind kind = RawKind::Bang;
  int index = 0;
  std::vector<RawTerm> children;
  std::vector<std::string> path;
  std::optional<ObjectType> at;  // the object of an identity
  SourcePos pos;
  std::optional<ObjectType> dom;
  std::optional<ObjectType> cod;

  static RawTerm bang();
  static RawTerm quest();
  static RawTerm proj(int i, RawTerm body);
  static RawTerm inj(int j, RawTerm body);
  static RawTerm tuple(RawTerm left, RawTerm right);
  static RawTerm cotuple(RawTerm left, RawTerm right);
  static RawTerm gen(std::vector<std::string> path);
  static RawTerm id(ObjectType at);
  static RawTerm cut(RawTerm left, RawTerm right);
  static RawTerm from(const Term& t);

  bool typed() const { return dom.has_value() && cod.has_value(); }
  bool cut_free() const;
  std::string to_string() const;

  /// Structural equality; typing annotations and positions are ignored.
  friend bool operator==(const RawTerm& a, const RawTerm& b);
};

struct TypingError {
  std::vector<int> location;  // child indices from the root
  SourcePos pos;
  std::string expected;
  std::string found;
  std::string message;

  std::string location_string() const;
  std::string to_string() const;
};

class TypingException : public std::runtime_error {
 public:
  explicit TypingException(TypingError e);
  const TypingError& error() const { return error_; }

 private:
  TypingError error_;
};

/// Checks `t` against dom -> cod and returns a copy with every node typed.
/// Intermediate objects of cuts are solved by unification; a cut whose middle
/// object stays undetermined is rejected (write `id:T` to pin it).
/// Throws TypingException at the first failing node.
RawTerm infer(const RawTerm& t, const ObjectType& dom, const ObjectType& cod,
              const GeneratorGraph& graph = GeneratorGraph{});

/// The Term of a typed raw term without cuts or identities.
Term to_term(const RawTerm& typed);

/// Checks that every generator named in `t` is a node of `graph`.
void check_generators(const ObjectType& t, const GeneratorGraph& graph);

}  // namespace sigmapi

template <>
struct std::hash<sigmapi::Term> {
  std::size_t operator()(const sigmapi::Term& t) const noexcept { return t.hash(); }
};
