#include "sigmapi/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace sigmapi {

GuardExceeded::GuardExceeded(std::uint64_t needed, std::uint64_t guard)
    : std::runtime_error("enumeration needs " + std::to_string(needed) + " terms, guard is " + std::to_string(guard)),
      needed_(needed),
      guard_(guard) {}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

// Union-find over the members of one homset.
struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // the smaller index stays the root
  }
};

}  // namespace

Universe::Universe(GeneratorGraph graph, OracleOptions options) : graph_(std::move(graph)), options_(options) {}

int Universe::type_id(const ObjectType& t) {
  auto it = type_index_.find(t);
  if (it != type_index_.end()) return it->second;
  TypeInfo info{t, {-1, -1}};
  if (t.is_sum() || t.is_prod()) {
    info.op[0] = type_id(t.left());
    info.op[1] = type_id(t.right());
  }
  int id = static_cast<int>(types_.size());
  types_.push_back(std::move(info));
  type_index_.emplace(t, id);
  return id;
}

int Universe::homset_id(int dom, int cod) {
  std::uint64_t key = (static_cast<std::uint64_t>(dom) << 32) | static_cast<std::uint32_t>(cod);
  auto it = homset_index_.find(key);
  if (it != homset_index_.end()) return it->second;
  const ObjectType X = types_[dom].type;
  const ObjectType A = types_[cod].type;
  int xo[2] = {types_[dom].op[0], types_[dom].op[1]};
  int ao[2] = {types_[cod].op[0], types_[cod].op[1]};
  Homset h;
  h.dom = dom;
  h.cod = cod;
  for (int k = 0; k < 2; ++k) {
    if (X.is_prod()) h.proj[k] = homset_id(xo[k], cod);
    if (A.is_sum()) h.inj[k] = homset_id(dom, ao[k]);
    if (A.is_prod()) h.tpair[k] = homset_id(dom, ao[k]);
    if (X.is_sum()) h.cpair[k] = homset_id(xo[k], cod);
  }
  if (X.is_gen() && A.is_gen()) h.paths = gen_paths(dom, cod);
  int id = static_cast<int>(homsets_.size());
  homsets_.push_back(std::move(h));
  homset_index_.emplace(key, id);
  return id;
}

std::vector<std::vector<std::string>> Universe::gen_paths(int dom, int cod) {
  const std::string& x = types_[dom].type.name();
  const std::string& a = types_[cod].type.name();
  std::size_t limit = graph_.acyclic() ? graph_.edges().size() : options_.max_path_length;
  return graph_.paths(x, a, limit);
}

const HomsetSummary& Universe::summary(int h) {
  auto it = summaries_.find(h);
  if (it != summaries_.end()) return it->second;
  HomsetSummary s;
  auto leaf = [&](std::uint64_t n, std::size_t size, std::size_t height) {
    if (n == 0) return;
    s.count = sat_add(s.count, n);
    s.max_size = std::max(s.max_size, size);
    s.max_height = std::max(s.max_height, height);
  };
  const ObjectType& X = types_[homsets_[h].dom].type;
  const ObjectType& A = types_[homsets_[h].cod].type;
  if (A.is_one()) leaf(1, 1, 1);
  if (X.is_zero()) leaf(1, 1, 1);
  for (int k = 0; k < 2; ++k) {
    for (int c : {homsets_[h].proj[k], homsets_[h].inj[k]}) {
      if (c < 0) continue;
      HomsetSummary cs = summary(c);
      leaf(cs.count, cs.max_size + 1, cs.max_height + 1);
    }
  }
  for (const int* pair : {homsets_[h].tpair, homsets_[h].cpair}) {
    if (pair[0] < 0) continue;
    HomsetSummary a = summary(pair[0]);
    HomsetSummary b = summary(pair[1]);
    leaf(sat_mul(a.count, b.count), 1 + a.max_size + b.max_size, 1 + std::max(a.max_height, b.max_height));
  }
  for (const auto& p : homsets_[h].paths) leaf(1, 1 + p.size(), 1);
  return summaries_.emplace(h, s).first->second;
}

// Homsets that must be built before h, children first, and how many terms
// they add in total.
std::uint64_t Universe::pending(int h, std::vector<int>& order) {
  std::vector<char> seen(homsets_.size(), 0);
  std::uint64_t total = 0;
  std::function<void(int)> visit = [&](int k) {
    if (seen[k] || homsets_[k].enumerated) return;
    seen[k] = 1;
    const Homset& hs = homsets_[k];
    if (summary(k).count > 0) {
      for (int c : {hs.proj[0], hs.proj[1], hs.inj[0], hs.inj[1]})
        if (c >= 0 && summary(c).count > 0) visit(c);
      for (const int* pair : {hs.tpair, hs.cpair})
        if (pair[0] >= 0 && summary(pair[0]).count > 0 && summary(pair[1]).count > 0) {
          visit(pair[0]);
          visit(pair[1]);
        }
    }
    total = sat_add(total, summary(k).count);
    order.push_back(k);
  };
  visit(h);
  return total;
}

void Universe::enumerate(int h) {
  if (homsets_[h].enumerated) return;
  std::vector<int> order;
  std::uint64_t needed = pending(h, order);
  if (needed > options_.guard) throw GuardExceeded(needed, options_.guard);
  nodes_.reserve(nodes_.size() + needed);
  for (int k : order) {
    materialize(k);
    close(k);
  }
}

void Universe::materialize(int h) {
  Homset& hs = homsets_[h];
  const ObjectType& X = types_[hs.dom].type;
  const ObjectType& A = types_[hs.cod].type;
  auto id = [&] { return static_cast<Id>(nodes_.size()); };
  auto push = [&](TermKind k, int index, Id a, Id b) {
    nodes_.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(index), a, b, static_cast<Id>(h), 0});
  };
  auto nonempty = [&](int c) { return c >= 0 && homsets_[c].enumerated && count(c) > 0; };

  hs.off[BBang] = id();
  if (A.is_one()) push(TermKind::Bang, 0, 0, 0);
  hs.off[BQuest] = id();
  if (X.is_zero()) push(TermKind::Quest, 0, 0, 0);
  for (int k = 0; k < 2; ++k) {
    hs.off[BProj0 + k] = id();
    if (nonempty(hs.proj[k]))
      for (Id c = homsets_[hs.proj[k]].begin(); c < homsets_[hs.proj[k]].end(); ++c) push(TermKind::Proj, k, c, 0);
  }
  for (int k = 0; k < 2; ++k) {
    hs.off[BInj0 + k] = id();
    if (nonempty(hs.inj[k]))
      for (Id c = homsets_[hs.inj[k]].begin(); c < homsets_[hs.inj[k]].end(); ++c) push(TermKind::Inj, k, c, 0);
  }
  auto pairs = [&](const int* pair, TermKind kind) {
    if (!nonempty(pair[0]) || !nonempty(pair[1])) return;
    const Homset& l = homsets_[pair[0]];
    const Homset& r = homsets_[pair[1]];
    for (Id a = l.begin(); a < l.end(); ++a)
      for (Id b = r.begin(); b < r.end(); ++b) push(kind, 0, a, b);
  };
  hs.off[BTuple] = id();
  pairs(hs.tpair, TermKind::Tuple);
  hs.off[BCotuple] = id();
  pairs(hs.cpair, TermKind::Cotuple);
  hs.off[BGen] = id();
  for (std::size_t p = 0; p < hs.paths.size(); ++p) push(TermKind::GenArrow, 0, static_cast<Id>(p), 0);
  hs.off[BEnd] = id();
  hs.enumerated = true;
}

Universe::Id Universe::lookup(int h, TermKind k, int index, Id a, Id b) const {
  const Homset& hs = homsets_[h];
  switch (k) {
    case TermKind::Bang: return hs.off[BBang];
    case TermKind::Quest: return hs.off[BQuest];
    case TermKind::Proj: return hs.off[BProj0 + index] + (a - homsets_[hs.proj[index]].begin());
    case TermKind::Inj: return hs.off[BInj0 + index] + (a - homsets_[hs.inj[index]].begin());
    case TermKind::Tuple: {
      const Homset& l = homsets_[hs.tpair[0]];
      const Homset& r = homsets_[hs.tpair[1]];
      return hs.off[BTuple] + (a - l.begin()) * count(hs.tpair[1]) + (b - r.begin());
    }
    case TermKind::Cotuple: {
      const Homset& l = homsets_[hs.cpair[0]];
      const Homset& r = homsets_[hs.cpair[1]];
      return hs.off[BCotuple] + (a - l.begin()) * count(hs.cpair[1]) + (b - r.begin());
    }
    case TermKind::GenArrow: return hs.off[BGen] + a;
  }
  return 0;
}

void Universe::close(int h) {
  const Homset& hs = homsets_[h];
  Id base = hs.begin();
  Id n = hs.end() - base;
  Dsu dsu(n);
  auto unite = [&](Id x, Id y) { dsu.unite(x - base, y - base); };
  auto kind = [&](Id x) { return static_cast<TermKind>(nodes_[x].kind); };

  // Congruence: children live in smaller homsets whose classes are final.
  std::unordered_map<std::uint64_t, Id> signature;
  signature.reserve(n);
  for (Id t = base; t < hs.end(); ++t) {
    const Node& nd = nodes_[t];
    TermKind k = kind(t);
    if (k == TermKind::Bang || k == TermKind::Quest || k == TermKind::GenArrow) continue;
    std::uint64_t key = (static_cast<std::uint64_t>(nd.kind) << 60) | (static_cast<std::uint64_t>(nd.index) << 59);
    key |= static_cast<std::uint64_t>(nodes_[nd.a].cls) << 29;
    if (k == TermKind::Tuple || k == TermKind::Cotuple) key |= nodes_[nd.b].cls;
    auto [it, fresh] = signature.emplace(key, t);
    if (!fresh) unite(t, it->second);
  }

  // Equations, matched left to right at the root; the right-hand side is
  // located by its children.
  for (Id t = base; t < hs.end(); ++t) {
    const Node nd = nodes_[t];
    switch (kind(t)) {
      case TermKind::Proj: {
        const Node& u = nodes_[nd.a];
        int i = nd.index;
        if (kind(nd.a) == TermKind::Tuple) {
          Id l = lookup(hs.tpair[0], TermKind::Proj, i, u.a, 0);
          Id r = lookup(hs.tpair[1], TermKind::Proj, i, u.b, 0);
          unite(t, lookup(h, TermKind::Tuple, 0, l, r));
        } else if (kind(nd.a) == TermKind::Inj) {
          Id p = lookup(hs.inj[u.index], TermKind::Proj, i, u.a, 0);
          unite(t, lookup(h, TermKind::Inj, u.index, p, 0));
        } else if (kind(nd.a) == TermKind::Bang) {
          unite(t, lookup(h, TermKind::Bang, 0, 0, 0));
        }
        break;
      }
      case TermKind::Inj: {
        const Node& u = nodes_[nd.a];
        int j = nd.index;
        if (kind(nd.a) == TermKind::Cotuple) {
          Id l = lookup(hs.cpair[0], TermKind::Inj, j, u.a, 0);
          Id r = lookup(hs.cpair[1], TermKind::Inj, j, u.b, 0);
          unite(t, lookup(h, TermKind::Cotuple, 0, l, r));
        } else if (kind(nd.a) == TermKind::Quest) {
          unite(t, lookup(h, TermKind::Quest, 0, 0, 0));
        }
        break;
      }
      case TermKind::Cotuple: {
        if (kind(nd.a) == TermKind::Tuple && kind(nd.b) == TermKind::Tuple) {
          const Node& l = nodes_[nd.a];
          const Node& r = nodes_[nd.b];
          Id c0 = lookup(hs.tpair[0], TermKind::Cotuple, 0, l.a, r.a);
          Id c1 = lookup(hs.tpair[1], TermKind::Cotuple, 0, l.b, r.b);
          unite(t, lookup(h, TermKind::Tuple, 0, c0, c1));
        } else if (kind(nd.a) == TermKind::Bang && kind(nd.b) == TermKind::Bang) {
          unite(t, lookup(h, TermKind::Bang, 0, 0, 0));
        }
        break;
      }
      case TermKind::Tuple:
        if (kind(nd.a) == TermKind::Quest && kind(nd.b) == TermKind::Quest) unite(t, lookup(h, TermKind::Quest, 0, 0, 0));
        break;
      case TermKind::Bang:
        if (types_[hs.dom].type.is_zero()) unite(t, lookup(h, TermKind::Quest, 0, 0, 0));
        break;
      default: break;
    }
  }

  std::size_t classes = 0;
  std::vector<Id> cls(n, 0);
  for (Id k = 0; k < n; ++k) {
    Id r = dsu.find(k);
    if (r == k) {
      cls[k] = next_class_++;
      ++classes;
    } else {
      cls[k] = cls[r];  // roots are the smallest members, so already numbered
    }
    nodes_[base + k].cls = cls[k];
  }
  homsets_[h].classes = classes;
}

std::pair<Universe::Id, Universe::Id> Universe::homset_range(const ObjectType& X, const ObjectType& A) {
  int h = homset_id(X, A);
  enumerate(h);
  return {homsets_[h].begin(), homsets_[h].end()};
}

std::vector<Term> Universe::enumerate(const ObjectType& X, const ObjectType& A) {
  auto [b, e] = homset_range(X, A);
  std::vector<Term> out;
  out.reserve(e - b);
  for (Id t = b; t < e; ++t) out.push_back(term(t));
  return out;
}

HomsetSummary Universe::summary(const ObjectType& X, const ObjectType& A) { return summary(homset_id(X, A)); }

std::size_t Universe::class_count(const ObjectType& X, const ObjectType& A) {
  int h = homset_id(X, A);
  enumerate(h);
  return homsets_[h].classes;
}

Universe::Id Universe::term_id(const Term& t, int h) {
  const Homset& hs = homsets_[h];
  switch (t.kind()) {
    case TermKind::Bang:
    case TermKind::Quest: return lookup(h, t.kind(), 0, 0, 0);
    case TermKind::Proj: return lookup(h, TermKind::Proj, t.index(), term_id(t.body(), hs.proj[t.index()]), 0);
    case TermKind::Inj: return lookup(h, TermKind::Inj, t.index(), term_id(t.body(), hs.inj[t.index()]), 0);
    case TermKind::Tuple:
      return lookup(h, TermKind::Tuple, 0, term_id(t.child(0), hs.tpair[0]), term_id(t.child(1), hs.tpair[1]));
    case TermKind::Cotuple:
      return lookup(h, TermKind::Cotuple, 0, term_id(t.child(0), hs.cpair[0]), term_id(t.child(1), hs.cpair[1]));
    case TermKind::GenArrow: {
      auto it = std::find(hs.paths.begin(), hs.paths.end(), t.path());
      if (it == hs.paths.end())
        throw std::invalid_argument("generator path " + t.to_string() + " is not in the enumerated homset");
      return lookup(h, TermKind::GenArrow, 0, static_cast<Id>(it - hs.paths.begin()), 0);
    }
  }
  return 0;
}

Universe::Id Universe::id_of(const Term& t) {
  int h = homset_id(t.dom(), t.cod());
  enumerate(h);
  return term_id(t, h);
}

Term Universe::term(Id id) {
  if (terms_.size() < nodes_.size()) terms_.resize(nodes_.size());
  if (terms_[id]) return *terms_[id];
  const Node nd = nodes_[id];
  const Homset& hs = homsets_[nd.homset];
  const ObjectType X = types_[hs.dom].type;
  const ObjectType A = types_[hs.cod].type;
  std::optional<Term> t;
  switch (static_cast<TermKind>(nd.kind)) {
    case TermKind::Bang: t = Term::bang(X); break;
    case TermKind::Quest: t = Term::quest(A); break;
    case TermKind::Proj: t = Term::proj(nd.index, term(nd.a), X.operand(1 - nd.index)); break;
    case TermKind::Inj: t = Term::inj(nd.index, term(nd.a), A.operand(1 - nd.index)); break;
    case TermKind::Tuple: t = Term::tuple(term(nd.a), term(nd.b)); break;
    case TermKind::Cotuple: t = Term::cotuple(term(nd.a), term(nd.b)); break;
    case TermKind::GenArrow: t = Term::gen_arrow(hs.paths[nd.a], X, A); break;
  }
  terms_[id] = t;
  return *t;
}

EqClass Universe::class_of(const Term& t) {
  Id id = id_of(t);
  const Homset& hs = homsets_[nodes_[id].homset];
  Id c = nodes_[id].cls;
  std::vector<Id> ids;
  for (Id k = hs.begin(); k < hs.end(); ++k)
    if (nodes_[k].cls == c) ids.push_back(k);
  std::vector<Term> members;
  members.reserve(ids.size());
  for (Id k : ids) members.push_back(term(k));
  Term canonical = members.front();
  return EqClass{std::move(members), std::move(canonical)};
}

bool Universe::same_class(const Term& f, const Term& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) return false;
  return nodes_[id_of(f)].cls == nodes_[id_of(g)].cls;
}

std::optional<CardinalPath> Universe::cardinal_path(const Term& f, const Term& g) {
  auto corner = [](const Term& t) -> std::pair<Corner, Term> {
    if (t.kind() == TermKind::Inj) return {Corner{true, t.index()}, t.body()};
    if (t.kind() == TermKind::Proj) return {Corner{false, t.index()}, t.body()};
    throw std::invalid_argument("cardinal_path needs an injection or a projection, got " + t.to_string());
  };
  if (!f.dom().is_prod() || !f.cod().is_sum() || f.dom() != g.dom() || f.cod() != g.cod())
    throw std::invalid_argument("cardinal_path needs parallel terms X0 * X1 -> A0 + A1");
  auto [cf, f1] = corner(f);
  auto [cg, g1] = corner(g);
  return cardinal_path(f.dom(), f.cod(), cf, f1, cg, g1);
}

std::optional<CardinalPath> Universe::cardinal_path(const ObjectType& X, const ObjectType& A, Corner cf,
                                                    const Term& f, Corner cg, const Term& g) {
  if (!X.is_prod() || !A.is_sum()) throw std::invalid_argument("cardinal_path needs X0 * X1 and A0 + A1");
  int x = type_id(X), a = type_id(A);
  int xs[2] = {types_[x].op[0], types_[x].op[1]};
  int as[2] = {types_[a].op[0], types_[a].op[1]};
  // corner code: product side j -> j, sum side i -> 2 + i
  int corner_hom[4] = {homset_id(x, as[0]), homset_id(x, as[1]), homset_id(xs[0], a), homset_id(xs[1], a)};
  for (int c : corner_hom) enumerate(c);
  auto code = [](Corner c) { return c.product_side ? c.index : 2 + c.index; };
  auto check = [&](Corner c, const Term& t) {
    const Homset& hs = homsets_[corner_hom[code(c)]];
    if (t.dom() != types_[hs.dom].type || t.cod() != types_[hs.cod].type)
      throw std::invalid_argument("term " + t.to_string() + " is not in the named corner");
  };
  check(cf, f);
  check(cg, g);

  std::unordered_map<std::uint64_t, std::uint32_t> vertex;
  std::vector<std::pair<int, Id>> label;  // corner code, class
  std::vector<std::vector<std::pair<std::uint32_t, Id>>> adj;  // neighbour, id of the linking term
  std::vector<std::vector<Id>> link_term;
  auto vid = [&](int c, Id cls) {
    std::uint64_t key = (static_cast<std::uint64_t>(c) << 32) | cls;
    auto [it, fresh] = vertex.emplace(key, static_cast<std::uint32_t>(label.size()));
    if (fresh) {
      label.emplace_back(c, cls);
      adj.emplace_back();
    }
    return it->second;
  };
  std::uint32_t start = vid(code(cf), nodes_[term_id(f, corner_hom[code(cf)])].cls);
  std::uint32_t goal = vid(code(cg), nodes_[term_id(g, corner_hom[code(cg)])].cls);

  // Elementary pairs: p_i h in corner j, s_j h in corner 2 + i.
  struct Edge {
    Id h, up, down;
  };
  std::vector<std::vector<std::pair<std::uint32_t, Edge>>> edges;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int hh = homset_id(xs[i], as[j]);
      enumerate(hh);
      for (Id h = homsets_[hh].begin(); h < homsets_[hh].end(); ++h) {
        Id up = lookup(corner_hom[j], TermKind::Proj, i, h, 0);
        Id down = lookup(corner_hom[2 + i], TermKind::Inj, j, h, 0);
        std::uint32_t u = vid(j, nodes_[up].cls);
        std::uint32_t v = vid(2 + i, nodes_[down].cls);
        if (edges.size() < adj.size()) edges.resize(adj.size());
        edges[u].push_back({v, {h, up, down}});
        edges[v].push_back({u, {h, up, down}});
      }
    }
  edges.resize(adj.size());

  std::vector<std::int64_t> prev(label.size(), -1);
  std::vector<Edge> via(label.size());
  std::vector<char> seen(label.size(), 0);
  std::deque<std::uint32_t> queue{start};
  seen[start] = 1;
  while (!queue.empty() && !seen[goal]) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    for (const auto& [v, e] : edges[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      prev[v] = u;
      via[v] = e;
      queue.push_back(v);
    }
  }
  if (!seen[goal]) return std::nullopt;

  std::vector<std::uint32_t> chain{goal};
  while (chain.back() != start) chain.push_back(static_cast<std::uint32_t>(prev[chain.back()]));
  std::reverse(chain.begin(), chain.end());
  auto corner_of = [](int c) { return c < 2 ? Corner{true, c} : Corner{false, c - 2}; };
  CardinalPath path;
  path.elements.emplace_back(cf, f);
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const Edge& e = via[chain[k]];
    int c = label[chain[k]].first;
    path.bouncers.push_back(term(e.h));
    path.elements.emplace_back(corner_of(c), term(c < 2 ? e.up : e.down));
  }
  if (chain.size() > 1) path.elements.back() = {cg, g};
  return path;
}

std::vector<Term> Universe::find_bouncers(const Term& f_side, const Term& g_side, int i, int j) {
  i &= 1;
  j &= 1;
  const ObjectType& X = f_side.dom();
  const ObjectType& A = g_side.cod();
  if (!X.is_prod() || !A.is_sum() || f_side.cod() != A.operand(j) || g_side.dom() != X.operand(i))
    throw std::invalid_argument("find_bouncers needs f_side : X0 * X1 -> A_j and g_side : X_i -> A0 + A1");
  int up_h = homset_id(X, A.operand(j));
  int down_h = homset_id(X.operand(i), A);
  int mid = homset_id(X.operand(i), A.operand(j));
  enumerate(up_h);
  enumerate(down_h);
  enumerate(mid);
  Id fc = nodes_[id_of(f_side)].cls;
  Id gc = nodes_[id_of(g_side)].cls;
  std::vector<Term> out;
  for (Id h = homsets_[mid].begin(); h < homsets_[mid].end(); ++h)
    if (nodes_[lookup(up_h, TermKind::Proj, i, h, 0)].cls == fc && nodes_[lookup(down_h, TermKind::Inj, j, h, 0)].cls == gc)
      out.push_back(term(h));
  return out;
}

}  // namespace sigmapi
