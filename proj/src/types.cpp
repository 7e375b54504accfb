#include "sigmapi/types.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hashing.hpp"

namespace sigmapi {

using detail::TypeNode;

namespace {

std::shared_ptr<const TypeNode> make_leaf(TypeKind kind) {
  auto n = std::make_shared<TypeNode>();
  n->kind = kind;
  n->pointed = kind == TypeKind::One;
  n->copointed = kind == TypeKind::Zero;
  n->hash = detail::mix(static_cast<std::uint64_t>(kind) + 0x51ed27u);
  return n;
}

const std::shared_ptr<const TypeNode>& zero_node() {
  static const auto n = make_leaf(TypeKind::Zero);
  return n;
}

const std::shared_ptr<const TypeNode>& one_node() {
  static const auto n = make_leaf(TypeKind::One);
  return n;
}

}  // namespace

ObjectType::ObjectType() : node_(zero_node()) {}

ObjectType ObjectType::zero() { return ObjectType(zero_node()); }
ObjectType ObjectType::one() { return ObjectType(one_node()); }

ObjectType ObjectType::gen(std::string name) {
  if (name.empty()) throw std::invalid_argument("generator name must not be empty");
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Gen;
  n->has_generators = true;
  n->hash = detail::mix(detail::mix(0x9e11u) ^ std::hash<std::string>{}(name));
  n->name = std::move(name);
  return ObjectType(std::move(n));
}

ObjectType ObjectType::sum(ObjectType left, ObjectType right) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Sum;
  n->size = 1 + left.size() + right.size();
  n->height = 1 + std::max(left.height(), right.height());
  n->pointed = left.pointed() || right.pointed();
  n->copointed = left.copointed() && right.copointed();
  n->has_generators = left.has_generators() || right.has_generators();
  n->hash = detail::combine(detail::combine(0x5u, left.hash()), right.hash());
  n->operands[0] = std::move(left);
  n->operands[1] = std::move(right);
  return ObjectType(std::move(n));
}

ObjectType ObjectType::prod(ObjectType left, ObjectType right) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Prod;
  n->size = 1 + left.size() + right.size();
  n->height = 1 + std::max(left.height(), right.height());
  n->pointed = left.pointed() && right.pointed();
  n->copointed = left.copointed() || right.copointed();
  n->has_generators = left.has_generators() || right.has_generators();
  n->hash = detail::combine(detail::combine(0x7u, left.hash()), right.hash());
  n->operands[0] = std::move(left);
  n->operands[1] = std::move(right);
  return ObjectType(std::move(n));
}


const ObjectType& ObjectType::operand(int i) const {
  if (node_->kind != TypeKind::Sum && node_->kind != TypeKind::Prod)
    throw std::logic_error("operand() on a type that is not a sum or product: " + to_string());
  return node_->operands[i & 1];
}

const std::string& ObjectType::name() const { return node_->name; }

bool operator==(const ObjectType& a, const ObjectType& b) {
  const TypeNode* x = a.node_.get();
  const TypeNode* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case TypeKind::Zero:
    case TypeKind::One:
      return true;
    case TypeKind::Gen:
      return x->name == y->name;
    default:
      return x->operands[0] == y->operands[0] && x->operands[1] == y->operands[1];
  }
}

namespace {

void print(const ObjectType& t, std::string& out) {
  switch (t.kind()) {
    case TypeKind::Zero: out += '0'; return;
    case TypeKind::One: out += '1'; return;
    case TypeKind::Gen: out += t.name(); return;
    case TypeKind::Sum: {
      // '+' is right-associative: only a left sum needs parentheses.
      bool paren = t.left().is_sum();
      if (paren) out += '(';
      print(t.left(), out);
      if (paren) out += ')';
      out += " + ";
      print(t.right(), out);
      return;
    }
    case TypeKind::Prod: {
      bool lparen = t.left().is_sum() || t.left().is_prod();
      bool rparen = t.right().is_sum();
      if (lparen) out += '(';
      print(t.left(), out);
      if (lparen) out += ')';
      out += " * ";
      if (rparen) out += '(';
      print(t.right(), out);
      if (rparen) out += ')';
      return;
    }
  }
}

}  // namespace

std::string ObjectType::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

TypeMetrics metrics(const ObjectType& t) { return {t.size(), t.height()}; }

bool type_pointed(const ObjectType& t) { return t.pointed(); }
bool type_copointed(const ObjectType& t) { return t.copointed(); }

std::vector<ObjectType> types_of_size(std::size_t size) {
  if (size == 0 || size % 2 == 0) return {};
  if (size == 1) return {ObjectType::zero(), ObjectType::one()};
  std::vector<ObjectType> out;
  for (std::size_t l = 1; l + 1 < size; l += 2) {
    auto lefts = types_of_size(l);
    auto rights = types_of_size(size - 1 - l);
    for (const auto& a : lefts)
      for (const auto& b : rights) {
        out.push_back(ObjectType::sum(a, b));
        out.push_back(ObjectType::prod(a, b));
      }
  }
  return out;
}

}  // namespace sigmapi
