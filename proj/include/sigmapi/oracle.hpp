#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigmapi/graph.hpp"
#include "sigmapi/terms.hpp"

namespace sigmapi {

/// Thrown when an enumeration would materialize more terms than allowed.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::uint64_t needed, std::uint64_t guard);
  std::uint64_t needed() const { return needed_; }
  std::uint64_t guard() const { return guard_; }

 private:
  std::uint64_t needed_;
  std::uint64_t guard_;
};

struct OracleOptions {
  /// Maximum number of new terms one enumeration may create.
  std::uint64_t guard = 1'000'000;
  /// Longest generator path enumerated when the graph has cycles.
  std::size_t max_path_length = 4;
};

/// Count and extreme metrics of a homset, computed without building it.
struct HomsetSummary {
  std::uint64_t count = 0;  // saturates at UINT64_MAX
  std::size_t max_size = 0;
  std::size_t max_height = 0;
};

/// An equivalence class: every syntactic member and the first one in
/// enumeration order.
struct EqClass {
  std::vector<Term> members;
  Term canonical;
};

/// The four corners of Hom(X0 * X1, A0 + A1):
///   product side, index j:  Hom(X0 * X1, A_j)
///   sum side, index i:      Hom(X_i, A0 + A1)
struct Corner {
  bool product_side = true;
  int index = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// A path in the diagram of cardinals. `bouncers[k]` is the h with
/// p_i h on the product side and s_j h on the sum side linking element k to k + 1.
struct CardinalPath {
  std::vector<std::pair<Corner, Term>> elements;
  std::vector<Term> bouncers;
  std::size_t steps() const { return bouncers.size(); }
};

/// The ground truth: every cut-free term of a homset, closed under the
/// equations
///   p_i <f, g> = <p_i f, p_i g>        s_j {f, g} = {s_j f, s_j g}
///   p_i s_j f = s_j p_i f              {<f11, f12>, <f21, f22>} = <{f11, f21}, {f12, f22}>
///   p_i ! = !    s_j ? = ?    {!, !} = !    <?, ?> = ?    !_0 = ?_1
/// and congruence. Generator arrows are equal exactly when their paths are.
///
/// Terms are hash-consed: each homset occupies a contiguous id range laid out
/// constructor by constructor (! ? p0 p1 s0 s1 <> {} @), so the id of a term
/// follows from the ids of its children. Classes of a homset are computed once
/// all smaller homsets are final. Not thread-safe.
class Universe {
 public:
  using Id = std::uint32_t;

  explicit Universe(GeneratorGraph graph = GeneratorGraph{}, OracleOptions options = OracleOptions{});

  const GeneratorGraph& graph() const { return graph_; }
  OracleOptions& options() { return options_; }

  /// Enumerates Hom(X, A) with its classes; throws GuardExceeded.
  std::pair<Id, Id> homset_range(const ObjectType& X, const ObjectType& A);
  /// All cut-free terms X -> A in enumeration order.
  std::vector<Term> enumerate(const ObjectType& X, const ObjectType& A);
  /// Number of terms and extreme metrics of Hom(X, A), without enumerating.
  HomsetSummary summary(const ObjectType& X, const ObjectType& A);
  std::size_t class_count(const ObjectType& X, const ObjectType& A);

  Id id_of(const Term& t);
  Term term(Id id);
  Id class_id(Id id) const { return nodes_[id].cls; }
  std::size_t size() const { return nodes_.size(); }

  EqClass class_of(const Term& t);
  bool same_class(const Term& f, const Term& g);

  /// Node layout, for callers that walk the universe bottom-up.
  TermKind kind(Id id) const { return static_cast<TermKind>(nodes_[id].kind); }
  int index(Id id) const { return nodes_[id].index; }
  Id child(Id id, int k) const { return k == 0 ? nodes_[id].a : nodes_[id].b; }

  /// A shortest path between two terms of Hom(X0 * X1, A0 + A1) whose outer
  /// constructor is an injection or a projection: s_j f' stands for f' in the
  /// product-side corner j and p_i g' for g' in the sum-side corner i.
  std::optional<CardinalPath> cardinal_path(const Term& f, const Term& g);
  /// The same search between explicit corner elements of the square over X0 * X1 and A0 + A1.
  std::optional<CardinalPath> cardinal_path(const ObjectType& X, const ObjectType& A, Corner cf, const Term& f,
                                            Corner cg, const Term& g);

  /// Every h : X_i -> A_j with p_i h = f_side and s_j h = g_side, where
  /// f_side : X0 * X1 -> A_j and g_side : X_i -> A0 + A1.
  std::vector<Term> find_bouncers(const Term& f_side, const Term& g_side, int i, int j);

 private:
  struct Node {
    std::uint8_t kind;
    std::uint8_t index;
    Id a;  // first child, or path number for generator arrows
    Id b;
    Id homset;
    Id cls;
  };

  enum Block { BBang, BQuest, BProj0, BProj1, BInj0, BInj1, BTuple, BCotuple, BGen, BEnd };

  struct Homset {
    int dom;
    int cod;
    bool enumerated = false;
    Id off[BEnd + 1] = {};
    int proj[2] = {-1, -1};
    int inj[2] = {-1, -1};
    int tpair[2] = {-1, -1};  // X -> A0 and X -> A1 under the tuple block
    int cpair[2] = {-1, -1};  // X0 -> A and X1 -> A under the cotuple block
    std::vector<std::vector<std::string>> paths;
    std::size_t classes = 0;
    Id begin() const { return off[0]; }
    Id end() const { return off[BEnd]; }
  };

  struct TypeInfo {
    ObjectType type;
    int op[2] = {-1, -1};
  };

  int type_id(const ObjectType& t);
  int homset_id(int dom, int cod);
  int homset_id(const ObjectType& X, const ObjectType& A) { return homset_id(type_id(X), type_id(A)); }
  const HomsetSummary& summary(int h);
  std::vector<std::vector<std::string>> gen_paths(int dom, int cod);
  std::uint64_t pending(int h, std::vector<int>& order);
  void enumerate(int h);
  void materialize(int h);
  void close(int h);
  Id lookup(int h, TermKind k, int index, Id a, Id b) const;
  Id count(int h) const { return homsets_[h].end() - homsets_[h].begin(); }
  Id term_id(const Term& t, int h);

  GeneratorGraph graph_;
  OracleOptions options_;
  std::vector<TypeInfo> types_;
  std::unordered_map<ObjectType, int> type_index_;
  std::vector<Homset> homsets_;
  std::unordered_map<std::uint64_t, int> homset_index_;
  std::unordered_map<int, HomsetSummary> summaries_;
  std::vector<Node> nodes_;
  std::vector<std::optional<Term>> terms_;
  Id next_class_ = 0;
};

}  // namespace sigmapi
