#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace sigmapi {

enum class TypeKind : std::uint8_t { Zero, One, Gen, Sum, Prod };

namespace detail {
class TermNode;
struct TypeNode;
}  // namespace detail

/// An object of the free sum/product category: 0, 1, a generator, A + B or A * B.
///
/// Values are immutable and cheap to copy. Structural metrics and the
/// pointed/copointed predicates are computed once, when the node is built.
class ObjectType {
 public:
  ObjectType();  // the initial object 0

  static ObjectType zero();
  static ObjectType one();
  static ObjectType gen(std::string name);
  static ObjectType sum(ObjectType left, ObjectType right);
  static ObjectType prod(ObjectType left, ObjectType right);

  TypeKind kind() const;
  bool is_zero() const { return kind() == TypeKind::Zero; }
  bool is_one() const { return kind() == TypeKind::One; }
  bool is_gen() const { return kind() == TypeKind::Gen; }
  bool is_sum() const { return kind() == TypeKind::Sum; }
  bool is_prod() const { return kind() == TypeKind::Prod; }

  /// Operand 0 or 1 of a sum or product.
  const ObjectType& operand(int i) const;
  const ObjectType& left() const { return operand(0); }
  const ObjectType& right() const { return operand(1); }
  /// Generator name; empty for every other kind.
  const std::string& name() const;

  std::size_t size() const;
  std::size_t height() const;
  bool pointed() const;
  bool copointed() const;
  bool has_generators() const;
  std::uint64_t hash() const;

  std::string to_string() const;

  const detail::TypeNode* node() const { return node_.get(); }

  friend bool operator==(const ObjectType& a, const ObjectType& b);
  friend bool operator!=(const ObjectType& a, const ObjectType& b) { return !(a == b); }

 private:
  friend struct detail::TypeNode;
  explicit ObjectType(std::nullptr_t) {}
  explicit ObjectType(std::shared_ptr<const detail::TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TypeNode> node_;
};

namespace detail {

struct TypeNode {
  TypeNode() : operands{ObjectType(nullptr), ObjectType(nullptr)} {}

  TypeKind kind = TypeKind::Zero;
  ObjectType operands[2];
  std::string name;
  std::size_t size = 1;
  std::size_t height = 1;
  bool pointed = false;
  bool copointed = false;
  bool has_generators = false;
  std::uint64_t hash = 0;

  // Lazily filled by point_of / copoint_of; the witnesses never change once built.
  mutable std::once_flag point_once;
  mutable std::once_flag copoint_once;
  mutable std::shared_ptr<const TermNode> point_witness;
  mutable std::shared_ptr<const TermNode> copoint_witness;
};

}  // namespace detail

inline TypeKind ObjectType::kind() const { return node_->kind; }
inline std::size_t ObjectType::size() const { return node_->size; }
inline std::size_t ObjectType::height() const { return node_->height; }
inline bool ObjectType::pointed() const { return node_->pointed; }
inline bool ObjectType::copointed() const { return node_->copointed; }
inline bool ObjectType::has_generators() const { return node_->has_generators; }
inline std::uint64_t ObjectType::hash() const { return node_->hash; }

struct TypeMetrics {
  std::size_t size = 0;
  std::size_t height = 0;
  friend bool operator==(const TypeMetrics&, const TypeMetrics&) = default;
};

TypeMetrics metrics(const ObjectType& t);

/// Hom(1, t) is non-empty.
bool type_pointed(const ObjectType& t);
/// Hom(t, 0) is non-empty.
bool type_copointed(const ObjectType& t);

/// Every generator-free type with exactly `size` nodes, in a fixed order.
std::vector<ObjectType> types_of_size(std::size_t size);

}  // namespace sigmapi

template <>
struct std::hash<sigmapi::ObjectType> {
  std::size_t operator()(const sigmapi::ObjectType& t) const noexcept { return t.hash(); }
};
