#include "sigmapi/terms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hashing.hpp"

namespace sigmapi {

using detail::TermNode;

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Bang: return "bang";
    case TermKind::Quest: return "quest";
    case TermKind::Proj: return "proj";
    case TermKind::Inj: return "inj";
    case TermKind::Tuple: return "tuple";
    case TermKind::Cotuple: return "cotuple";
    case TermKind::GenArrow: return "gen";
  }
  return "?";
}

namespace {

std::uint64_t node_hash(TermKind kind, int index, std::uint64_t a, std::uint64_t b, const ObjectType& dom,
                        const ObjectType& cod) {
  std::uint64_t h = detail::mix((static_cast<std::uint64_t>(kind) << 8) | static_cast<std::uint64_t>(index));
  h = detail::combine(h, a);
  h = detail::combine(h, b);
  h = detail::combine(h, dom.hash());
  return detail::combine(h, cod.hash());
}

void mismatch(const char* what, const ObjectType& expected, const ObjectType& found) {
  throw std::invalid_argument(std::string(what) + ": expected " + expected.to_string() + ", found " +
                              found.to_string());
}

}  // namespace

Term Term::from_node(std::shared_ptr<const TermNode> node) { return Term(std::move(node)); }

Term Term::bang(ObjectType dom) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Bang;
  n->has_generators = dom.has_generators();
  n->dom = std::move(dom);
  n->cod = ObjectType::one();
  n->hash = node_hash(TermKind::Bang, 0, 0, 0, n->dom, n->cod);
  return Term(std::move(n));
}

Term Term::quest(ObjectType cod) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Quest;
  n->has_generators = cod.has_generators();
  n->dom = ObjectType::zero();
  n->cod = std::move(cod);
  n->hash = node_hash(TermKind::Quest, 0, 0, 0, n->dom, n->cod);
  return Term(std::move(n));
}

Term Term::proj(int i, Term body, ObjectType other) {
  i &= 1;
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Proj;
  n->index = static_cast<std::uint8_t>(i);
  n->has_generators = body.has_generators() || other.has_generators();
  n->dom = i == 0 ? ObjectType::prod(body.dom(), std::move(other)) : ObjectType::prod(std::move(other), body.dom());
  n->cod = body.cod();
  n->size = 1 + body.node_->size;
  n->height = 1 + body.node_->height;
  n->hash = node_hash(TermKind::Proj, i, body.hash(), 0, n->dom, n->cod);
  n->kids[0] = std::move(body);
  return Term(std::move(n));
}

Term Term::inj(int j, Term body, ObjectType other) {
  j &= 1;
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Inj;
  n->index = static_cast<std::uint8_t>(j);
  n->has_generators = body.has_generators() || other.has_generators();
  n->dom = body.dom();
  n->cod = j == 0 ? ObjectType::sum(body.cod(), std::move(other)) : ObjectType::sum(std::move(other), body.cod());
  n->size = 1 + body.node_->size;
  n->height = 1 + body.node_->height;
  n->hash = node_hash(TermKind::Inj, j, body.hash(), 0, n->dom, n->cod);
  n->kids[0] = std::move(body);
  return Term(std::move(n));
}

Term Term::tuple(Term left, Term right) {
  if (left.dom() != right.dom()) mismatch("tuple components must share a domain", left.dom(), right.dom());
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Tuple;
  n->has_generators = left.has_generators() || right.has_generators();
  n->dom = left.dom();
  n->cod = ObjectType::prod(left.cod(), right.cod());
  n->size = 1 + left.node_->size + right.node_->size;
  n->height = 1 + std::max(left.node_->height, right.node_->height);
  n->hash = node_hash(TermKind::Tuple, 0, left.hash(), right.hash(), n->dom, n->cod);
  n->kids[0] = std::move(left);
  n->kids[1] = std::move(right);
  return Term(std::move(n));
}

Term Term::cotuple(Term left, Term right) {
  if (left.cod() != right.cod()) mismatch("cotuple branches must share a codomain", left.cod(), right.cod());
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Cotuple;
  n->has_generators = left.has_generators() || right.has_generators();
  n->dom = ObjectType::sum(left.dom(), right.dom());
  n->cod = left.cod();
  n->size = 1 + left.node_->size + right.node_->size;
  n->height = 1 + std::max(left.node_->height, right.node_->height);
  n->hash = node_hash(TermKind::Cotuple, 0, left.hash(), right.hash(), n->dom, n->cod);
  n->kids[0] = std::move(left);
  n->kids[1] = std::move(right);
  return Term(std::move(n));
}

Term Term::gen_arrow(std::vector<std::string> path, ObjectType dom, ObjectType cod) {
  if (!dom.is_gen() || !cod.is_gen())
    throw std::invalid_argument("generator arrow between non-generator objects " + dom.to_string() + " -> " +
                                cod.to_string());
  if (path.empty() && dom != cod) mismatch("empty generator path is an identity", dom, cod);
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::GenArrow;
  n->has_generators = true;
  n->size = static_cast<std::uint32_t>(1 + path.size());
  std::uint64_t ph = 0x6a09e667u;
  for (const auto& e : path) ph = detail::combine(ph, std::hash<std::string>{}(e));
  n->path = std::move(path);
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  n->hash = node_hash(TermKind::GenArrow, 0, ph, 0, n->dom, n->cod);
  return Term(std::move(n));
}


std::size_t Term::arity() const {
  switch (node_->kind) {
    case TermKind::Proj:
    case TermKind::Inj: return 1;
    case TermKind::Tuple:
    case TermKind::Cotuple: return 2;
    default: return 0;
  }
}

const Term& Term::child(int k) const {
  if (static_cast<std::size_t>(k) >= arity())
    throw std::logic_error(std::string("child ") + std::to_string(k) + " of a " + kind_name(kind()) + " term");
  return node_->kids[k];
}

const std::vector<std::string>& Term::path() const { return node_->path; }

bool operator==(const Term& a, const Term& b) {
  const TermNode* x = a.node_.get();
  const TermNode* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->index != y->index || x->size != y->size) return false;
  switch (x->kind) {
    case TermKind::Bang: return x->dom == y->dom;
    case TermKind::Quest: return x->cod == y->cod;
    case TermKind::Proj:
      return x->dom.operand(1 - x->index) == y->dom.operand(1 - y->index) && x->kids[0] == y->kids[0];
    case TermKind::Inj:
      return x->cod.operand(1 - x->index) == y->cod.operand(1 - y->index) && x->kids[0] == y->kids[0];
    case TermKind::Tuple:
    case TermKind::Cotuple: return x->kids[0] == y->kids[0] && x->kids[1] == y->kids[1];
    case TermKind::GenArrow: return x->path == y->path && x->dom == y->dom && x->cod == y->cod;
  }
  return false;
}

namespace {

void print_path(const std::vector<std::string>& path, std::string& out) {
  if (path.size() == 1) {
    out += '@';
    out += path[0];
    return;
  }
  out += "@[";
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) out += ", ";
    out += path[k];
  }
  out += ']';
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Bang: out += '!'; return;
    case TermKind::Quest: out += '?'; return;
    case TermKind::Proj:
    case TermKind::Inj:
      out += t.kind() == TermKind::Proj ? 'p' : 's';
      out += static_cast<char>('0' + t.index());
      out += ' ';
      print_term(t.body(), out);
      return;
    case TermKind::Tuple:
    case TermKind::Cotuple:
      out += t.kind() == TermKind::Tuple ? '<' : '{';
      print_term(t.child(0), out);
      out += ", ";
      print_term(t.child(1), out);
      out += t.kind() == TermKind::Tuple ? '>' : '}';
      return;
    case TermKind::GenArrow: print_path(t.path(), out); return;
  }
}

}  // namespace

std::string Term::to_string() const {
  std::string out;
  print_term(*this, out);
  return out;
}

TypeMetrics term_metrics(const Term& t) { return {t.size(), t.height()}; }

// ---------------------------------------------------------------------------
// Raw terms

RawTerm RawTerm::bang() { return RawTerm{}; }

RawTerm RawTerm::quest() {
  RawTerm r;
  r.kind = RawKind::Quest;
  return r;
}

RawTerm RawTerm::proj(int i, RawTerm body) {
  RawTerm r;
  r.kind = RawKind::Proj;
  r.index = i & 1;
  r.children.push_back(std::move(body));
  return r;
}

RawTerm RawTerm::inj(int j, RawTerm body) {
  RawTerm r;
  r.kind = RawKind::Inj;
  r.index = j & 1;
  r.children.push_back(std::move(body));
  return r;
}

RawTerm RawTerm::tuple(RawTerm left, RawTerm right) {
  RawTerm r;
  r.kind = RawKind::Tuple;
  r.children.push_back(std::move(left));
  r.children.push_back(std::move(right));
  return r;
}

RawTerm RawTerm::cotuple(RawTerm left, RawTerm right) {
  RawTerm r = tuple(std::move(left), std::move(right));
  r.kind = RawKind::Cotuple;
  return r;
}

RawTerm RawTerm::gen(std::vector<std::string> path) {
  RawTerm r;
  r.kind = RawKind::GenArrow;
  r.path = std::move(path);
  return r;
}

RawTerm RawTerm::id(ObjectType at) {
  RawTerm r;
  r.kind = RawKind::Id;
  r.at = std::move(at);
  return r;
}

RawTerm RawTerm::cut(RawTerm left, RawTerm right) {
  RawTerm r = tuple(std::move(left), std::move(right));
  r.kind = RawKind::Cut;
  return r;
}

RawTerm RawTerm::from(const Term& t) {
  RawTerm r;
  switch (t.kind()) {
    case TermKind::Bang: r = bang(); break;
    case TermKind::Quest: r = quest(); break;
    case TermKind::Proj: r = proj(t.index(), from(t.body())); break;
    case TermKind::Inj: r = inj(t.index(), from(t.body())); break;
    case TermKind::Tuple: r = tuple(from(t.child(0)), from(t.child(1))); break;
    case TermKind::Cotuple: r = cotuple(from(t.child(0)), from(t.child(1))); break;
    case TermKind::GenArrow: r = gen(t.path()); break;
  }
  r.dom = t.dom();
  r.cod = t.cod();
  return r;
}

bool RawTerm::cut_free() const {
  if (kind == RawKind::Cut || kind == RawKind::Id) return false;
  return std::all_of(children.begin(), children.end(), [](const RawTerm& c) { return c.cut_free(); });
}

namespace {

void print_raw_seq(const RawTerm& t, std::string& out);

void print_raw_unary(const RawTerm& t, std::string& out) {
  switch (t.kind) {
    case RawKind::Bang: out += '!'; return;
    case RawKind::Quest: out += '?'; return;
    case RawKind::Proj:
    case RawKind::Inj:
      out += t.kind == RawKind::Proj ? 'p' : 's';
      out += static_cast<char>('0' + t.index);
      out += ' ';
      print_raw_unary(t.children[0], out);
      return;
    case RawKind::Tuple:
    case RawKind::Cotuple:
      out += t.kind == RawKind::Tuple ? '<' : '{';
      print_raw_seq(t.children[0], out);
      out += ", ";
      print_raw_seq(t.children[1], out);
      out += t.kind == RawKind::Tuple ? '>' : '}';
      return;
    case RawKind::GenArrow: print_path(t.path, out); return;
    case RawKind::Id: {
      const auto& a = *t.at;
      bool paren = a.is_sum() || a.is_prod();
      out += "id:";
      if (paren) out += '(';
      out += a.to_string();
      if (paren) out += ')';
      return;
    }
    case RawKind::Cut:
      out += '(';
      print_raw_seq(t, out);
      out += ')';
      return;
  }
}

void print_raw_seq(const RawTerm& t, std::string& out) {
  if (t.kind != RawKind::Cut) {
    print_raw_unary(t, out);
    return;
  }
  print_raw_seq(t.children[0], out);
  out += " ; ";
  print_raw_unary(t.children[1], out);
}

}  // namespace

std::string RawTerm::to_string() const {
  std::string out;
  print_raw_seq(*this, out);
  return out;
}

bool operator==(const RawTerm& a, const RawTerm& b) {
  if (a.kind != b.kind || a.index != b.index || a.path != b.path || a.children != b.children) return false;
  if (a.kind == RawKind::Id) return *a.at == *b.at;
  return true;
}

// ---------------------------------------------------------------------------
// Typing

std::string TypingError::location_string() const {
  std::string s = "root";
  for (int k : location) s += "." + std::to_string(k);
  return s;
}

std::string TypingError::to_string() const {
  std::ostringstream os;
  if (pos.line > 0) os << pos.line << ':' << pos.column << ": ";
  os << "type error at " << location_string() << ": " << message;
  if (!expected.empty() || !found.empty()) os << " (expected " << expected << ", found " << found << ")";
  return os.str();
}

TypingException::TypingException(TypingError e) : std::runtime_error(e.to_string()), error_(std::move(e)) {}

void check_generators(const ObjectType& t, const GeneratorGraph& graph) {
  if (!t.has_generators()) return;
  if (t.is_gen()) {
    if (!graph.has_node(t.name())) {
      TypingError e;
      e.message = "generator '" + t.name() + "' is not a node of the generator graph";
      throw TypingException(std::move(e));
    }
    return;
  }
  if (t.is_sum() || t.is_prod()) {
    check_generators(t.left(), graph);
    check_generators(t.right(), graph);
  }
}

namespace {

// Object expressions with unification variables, used only while typing cuts.
class Unifier {
 public:
  enum class K : std::uint8_t { Var, Zero, One, Gen, Sum, Prod };

  int fresh() { return push({K::Var, -1, -1, {}}); }

  int from(const ObjectType& t) {
    switch (t.kind()) {
      case TypeKind::Zero: return push({K::Zero, -1, -1, {}});
      case TypeKind::One: return push({K::One, -1, -1, {}});
      case TypeKind::Gen: return push({K::Gen, -1, -1, t.name()});
      case TypeKind::Sum: {
        int a = from(t.left()), b = from(t.right());
        return push({K::Sum, a, b, {}});
      }
      case TypeKind::Prod: {
        int a = from(t.left()), b = from(t.right());
        return push({K::Prod, a, b, {}});
      }
    }
    return -1;
  }

  int find(int x) const {
    while (nodes_[x].k == K::Var && nodes_[x].a >= 0) x = nodes_[x].a;
    return x;
  }

  K kind(int x) const { return nodes_[find(x)].k; }
  int operand(int x, int i) const {
    const auto& n = nodes_[find(x)];
    return i == 0 ? n.a : n.b;
  }

  /// Forces `x` to be a binary object of kind `k`; false if it is something else.
  bool expect_binary(int x, K k) {
    x = find(x);
    if (nodes_[x].k == k) return true;
    if (nodes_[x].k != K::Var) return false;
    int a = fresh(), b = fresh();
    int n = push({k, a, b, {}});
    nodes_[x].a = n;
    return true;
  }

  bool unify(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return true;
    if (nodes_[x].k == K::Var) return bind(x, y);
    if (nodes_[y].k == K::Var) return bind(y, x);
    const auto& a = nodes_[x];
    const auto& b = nodes_[y];
    if (a.k != b.k) return false;
    if (a.k == K::Gen) return a.name == b.name;
    if (a.k == K::Sum || a.k == K::Prod) {
      int a0 = a.a, a1 = a.b, b0 = b.a, b1 = b.b;
      return unify(a0, b0) && unify(a1, b1);
    }
    return true;
  }

  std::optional<ObjectType> zonk(int x) const {
    x = find(x);
    const auto& n = nodes_[x];
    switch (n.k) {
      case K::Var: return std::nullopt;
      case K::Zero: return ObjectType::zero();
      case K::One: return ObjectType::one();
      case K::Gen: return ObjectType::gen(n.name);
      case K::Sum:
      case K::Prod: {
        auto l = zonk(n.a);
        auto r = zonk(n.b);
        if (!l || !r) return std::nullopt;
        return n.k == K::Sum ? ObjectType::sum(*l, *r) : ObjectType::prod(*l, *r);
      }
    }
    return std::nullopt;
  }

  std::string show(int x) const {
    x = find(x);
    const auto& n = nodes_[x];
    switch (n.k) {
      case K::Var: return "_";
      case K::Zero: return "0";
      case K::One: return "1";
      case K::Gen: return n.name;
      case K::Sum: return "(" + show(n.a) + " + " + show(n.b) + ")";
      case K::Prod: return "(" + show(n.a) + " * " + show(n.b) + ")";
    }
    return "";
  }

 private:
  struct Node {
    K k;
    int a;  // left operand, or binding of a variable
    int b;
    std::string name;
  };

  int push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool occurs(int v, int x) const {
    x = find(x);
    if (x == v) return true;
    const auto& n = nodes_[x];
    if (n.k == K::Sum || n.k == K::Prod) return occurs(v, n.a) || occurs(v, n.b);
    return false;
  }

  bool bind(int v, int t) {
    if (occurs(v, t)) return false;
    nodes_[v].a = t;
    return true;
  }

  std::vector<Node> nodes_;
};

class Checker {
 public:
  explicit Checker(const GeneratorGraph& graph) : graph_(graph) {}

  void check(RawTerm& t, int dom, int cod) {
    typed_.push_back({&t, dom, cod, location_});
    switch (t.kind) {
      case RawKind::Bang:
        if (!u_.unify(cod, one())) fail(t, "'!' needs codomain 1", "1", cod);
        return;
      case RawKind::Quest:
        if (!u_.unify(dom, zero())) fail(t, "'?' needs domain 0", "0", dom);
        return;
      case RawKind::Proj:
        if (!u_.expect_binary(dom, Unifier::K::Prod)) fail(t, "projection needs a product domain", "_ * _", dom);
        descend(t, 0, u_.operand(dom, t.index), cod);
        return;
      case RawKind::Inj:
        if (!u_.expect_binary(cod, Unifier::K::Sum)) fail(t, "injection needs a sum codomain", "_ + _", cod);
        descend(t, 0, dom, u_.operand(cod, t.index));
        return;
      case RawKind::Tuple:
        if (!u_.expect_binary(cod, Unifier::K::Prod)) fail(t, "tuple needs a product codomain", "_ * _", cod);
        descend(t, 0, dom, u_.operand(cod, 0));
        descend(t, 1, dom, u_.operand(cod, 1));
        return;
      case RawKind::Cotuple:
        if (!u_.expect_binary(dom, Unifier::K::Sum)) fail(t, "cotuple needs a sum domain", "_ + _", dom);
        descend(t, 0, u_.operand(dom, 0), cod);
        descend(t, 1, u_.operand(dom, 1), cod);
        return;
      case RawKind::GenArrow: {
        if (t.path.empty()) {
          if (!u_.unify(dom, cod)) fail(t, "empty generator path is an identity", u_.show(dom), cod);
          return;
        }
        auto ends = graph_.endpoints(t.path);
        if (!ends) {
          TypingError e = error_at(t, "generator path is not a composable edge sequence");
          throw TypingException(std::move(e));
        }
        int src = u_.from(ObjectType::gen(ends->first));
        int tgt = u_.from(ObjectType::gen(ends->second));
        if (!u_.unify(dom, src)) fail(t, "generator path source", u_.show(src), dom);
        if (!u_.unify(cod, tgt)) fail(t, "generator path target", u_.show(tgt), cod);
        return;
      }
      case RawKind::Id: {
        check_generators(*t.at, graph_);
        int a = u_.from(*t.at);
        if (!u_.unify(dom, a)) fail(t, "identity domain", u_.show(a), dom);
        if (!u_.unify(cod, a)) fail(t, "identity codomain", u_.show(a), cod);
        return;
      }
      case RawKind::Cut: {
        int mid = u_.fresh();
        descend(t, 0, dom, mid);
        descend(t, 1, mid, cod);
        return;
      }
    }
  }

  // Resolves every recorded homset; the first node left with an unknown object fails.
  void finish() {
    for (auto& rec : typed_) {
      auto d = u_.zonk(rec.dom);
      auto c = u_.zonk(rec.cod);
      if (!d || !c) {
        location_ = rec.location;
        TypingError e = error_at(*rec.term, "cannot determine the intermediate object of a cut; pin it with id:T");
        e.found = u_.show(d ? rec.cod : rec.dom);
        throw TypingException(std::move(e));
      }
      if (rec.term->kind == RawKind::GenArrow && (!d->is_gen() || !c->is_gen())) {
        location_ = rec.location;
        TypingError e = error_at(*rec.term, "generator arrow between non-generator objects");
        e.expected = "generator";
        e.found = d->to_string() + " -> " + c->to_string();
        throw TypingException(std::move(e));
      }
      rec.term->dom = std::move(d);
      rec.term->cod = std::move(c);
    }
  }

  int from(const ObjectType& t) { return u_.from(t); }

 private:
  struct Record {
    RawTerm* term;
    int dom;
    int cod;
    std::vector<int> location;
  };

  int zero() { return u_.from(ObjectType::zero()); }
  int one() { return u_.from(ObjectType::one()); }

  void descend(RawTerm& t, int k, int dom, int cod) {
    location_.push_back(k);
    check(t.children[static_cast<std::size_t>(k)], dom, cod);
    location_.pop_back();
  }

  TypingError error_at(const RawTerm& t, std::string message) const {
    TypingError e;
    e.location = location_;
    e.pos = t.pos;
    e.message = std::move(message);
    return e;
  }

  [[noreturn]] void fail(const RawTerm& t, const char* message, std::string expected, int found) {
    TypingError e = error_at(t, message);
    e.expected = std::move(expected);
    e.found = u_.show(found);
    throw TypingException(std::move(e));
  }

  const GeneratorGraph& graph_;
  Unifier u_;
  std::vector<int> location_;
  std::vector<Record> typed_;
};

}  // namespace

RawTerm infer(const RawTerm& t, const ObjectType& dom, const ObjectType& cod, const GeneratorGraph& graph) {
  check_generators(dom, graph);
  check_generators(cod, graph);
  RawTerm out = t;
  Checker checker(graph);
  checker.check(out, checker.from(dom), checker.from(cod));
  checker.finish();
  return out;
}

Term to_term(const RawTerm& t) {
  if (!t.typed()) throw std::logic_error("to_term needs a typed raw term");
  switch (t.kind) {
    case RawKind::Bang: return Term::bang(*t.dom);
    case RawKind::Quest: return Term::quest(*t.cod);
    case RawKind::Proj: return Term::proj(t.index, to_term(t.children[0]), t.dom->operand(1 - t.index));
    case RawKind::Inj: return Term::inj(t.index, to_term(t.children[0]), t.cod->operand(1 - t.index));
    case RawKind::Tuple: return Term::tuple(to_term(t.children[0]), to_term(t.children[1]));
    case RawKind::Cotuple: return Term::cotuple(to_term(t.children[0]), to_term(t.children[1]));
    case RawKind::GenArrow: return Term::gen_arrow(t.path, *t.dom, *t.cod);
    case RawKind::Id:
    case RawKind::Cut: break;
  }
  throw std::logic_error("to_term: identities and cuts must be eliminated first");
}

}  // namespace sigmapi
