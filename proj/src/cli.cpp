#include "sigmapi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sigmapi/annotate.hpp"
#include "sigmapi/compose.hpp"
#include "sigmapi/factor.hpp"
#include "sigmapi/oracle.hpp"
#include "sigmapi/syntax.hpp"

namespace sigmapi {

using nlohmann::json;

ObjectType balanced_type(int height, bool product_root) {
  if (height <= 1) return ObjectType::one();
  ObjectType a = balanced_type(height - 1, !product_root);
  return product_root ? ObjectType::prod(a, a) : ObjectType::sum(a, a);
}

namespace {

// A map X -> A that picks summand / factor `salt` wherever it has to choose,
// and flips the salt between the branches of a cotuple. `swap` writes every
// s_j (p_i h) as p_i (s_j h).
Term canonical(const ObjectType& X, const ObjectType& A, int salt, bool swap) {
  if (X.is_zero()) return Term::quest(A);
  if (A.is_one()) return Term::bang(X);
  if (X.is_sum()) return Term::cotuple(canonical(X.left(), A, 0, swap), canonical(X.right(), A, 1, swap));
  if (A.is_prod()) return Term::tuple(canonical(X, A.left(), salt, swap), canonical(X, A.right(), salt, swap));
  if (X.is_one()) return Term::inj(salt, canonical(X, A.operand(salt), salt, swap), A.operand(1 - salt));
  Term h = canonical(X.operand(salt), A.operand(salt), salt, swap);
  if (swap) return Term::proj(salt, Term::inj(salt, h, A.operand(1 - salt)), X.operand(1 - salt));
  return Term::inj(salt, Term::proj(salt, h, X.operand(1 - salt)), A.operand(1 - salt));
}

}  // namespace

BenchCase bench_case(int height) {
  ObjectType X = balanced_type(height, true);
  ObjectType A = balanced_type(height, false);
  return BenchCase{height, X, A, canonical(X, A, 0, false), canonical(X, A, 0, true)};
}

BenchRow run_bench(const BenchCase& c, int repeat) {
  BenchRow row;
  row.height = c.height;
  row.size_X = c.dom.size();
  row.size_A = c.cod.size();
  row.micros = -1;
  for (int r = 0; r < std::max(repeat, 1); ++r) {
    auto t0 = std::chrono::steady_clock::now();
    DecideResult res = decide_with_stats(c.left, c.right);
    double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
    if (row.micros < 0 || us < row.micros) row.micros = us;
    row.steps = res.stats.steps();
    row.verdict = res.verdict;
  }
  return row;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A type error with the file and declaration it came from.
struct TypeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Module read_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_module(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.pos(), path + ":" + std::to_string(e.pos().line) + ":" + std::to_string(e.pos().column) + ": " +
                                  e.detail());
  }
}

Term check_declaration(const Declaration& d, const Module& m, const std::string& path) {
  try {
    return check_term(d.body, d.dom, d.cod, m.graph);
  } catch (const TypingException& e) {
    const TypingError& te = e.error();
    SourcePos pos = te.pos.line ? te.pos : d.pos;
    std::string msg = path + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": type error in " +
                      d.name + " at " + te.location_string() + ": " + te.message;
    if (!te.expected.empty() || !te.found.empty()) msg += " (expected " + te.expected + ", found " + te.found + ")";
    throw TypeFailure(msg);
  }
}

Term resolve(const Module& m, const std::string& name, const std::string& path) {
  const Declaration* d = m.find(name);
  if (!d) throw UsageError("no term named '" + name + "' in " + path);
  return check_declaration(*d, m, path);
}

std::string paint(const std::string& s, Outcome o, bool color) {
  if (!color) return s;
  const char* code = o == Outcome::Equal ? "32" : o == Outcome::NotEqual ? "31" : "33";
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

int exit_code(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Equal: return kExitEqual;
    case Outcome::NotEqual: return kExitNotEqual;
    case Outcome::RequiresOracle: return kExitRequiresOracle;
  }
  return kExitUsage;
}

json verdict_json(const Verdict& v) {
  json j;
  j["outcome"] = outcome_name(v.outcome);
  if (v.witness) {
    j["witness"] = {{"kind", witness_name(v.witness->kind)}};
    j["witness"]["term"] = v.witness->term ? json(v.witness->term->to_string()) : json(nullptr);
  }
  if (v.outcome == Outcome::NotEqual) {
    j["reason"] = reason_name(v.reason);
    j["components"] = v.components;
  }
  return j;
}

json stats_json(const DecideStats& s) { return {{"calls", s.calls}, {"visits", s.visits}, {"steps", s.steps()}}; }

std::string label(const Term& t) {
  switch (t.kind()) {
    case TermKind::Bang: return "!";
    case TermKind::Quest: return "?";
    case TermKind::Proj: return "p" + std::to_string(t.index());
    case TermKind::Inj: return "s" + std::to_string(t.index());
    case TermKind::Tuple: return "<,>";
    case TermKind::Cotuple: return "{,}";
    case TermKind::GenArrow: return t.to_string();
  }
  return "";
}

std::string homset(const Term& t) { return t.dom().to_string() + " -> " + t.cod().to_string(); }

void print_annotation(const AnnotatedTerm& a, int depth, std::ostream& out) {
  const Annotation& an = a.annotation();
  out << std::string(2 * depth, ' ') << label(a.term()) << " : " << homset(a.term());
  if (a.definite()) out << "  definite";
  if (an.pointed) out << "  pointed by " << an.point_witness->to_string();
  if (an.copointed) out << "  copointed by " << an.copoint_witness->to_string();
  out << "\n";
  for (std::size_t k = 0; k < a.arity(); ++k) print_annotation(a.child(static_cast<int>(k)), depth + 1, out);
}

json annotation_json(const AnnotatedTerm& a) {
  const Annotation& an = a.annotation();
  json j = {{"constructor", label(a.term())},
            {"term", a.term().to_string()},
            {"dom", a.dom().to_string()},
            {"cod", a.cod().to_string()},
            {"pointed", an.pointed},
            {"copointed", an.copointed}};
  j["point_witness"] = an.point_witness ? json(an.point_witness->to_string()) : json(nullptr);
  j["copoint_witness"] = an.copoint_witness ? json(an.copoint_witness->to_string()) : json(nullptr);
  j["children"] = json::array();
  for (std::size_t k = 0; k < a.arity(); ++k) j["children"].push_back(annotation_json(a.child(static_cast<int>(k))));
  return j;
}

std::string corner_name(const Corner& c) {
  return std::string(c.product_side ? "product" : "sum") + " " + std::to_string(c.index);
}

// The flags shared by the subcommands.
struct Options {
  std::string file;
  std::string left;
  std::string right;
  std::string term;
  std::string batch;
  std::string dom;
  std::string cod;
  bool json = false;
  bool witness = false;
  bool stats = false;
  bool classes = false;
  bool list = false;
  int inj = -1;
  int proj = -1;
  int i = 0;
  int j = 0;
  std::uint64_t guard = OracleOptions{}.guard;
  std::size_t max_path = OracleOptions{}.max_path_length;
  int min_height = 2;
  int max_height = 10;
  int repeat = 1;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, bool color) : o_(o), out_(out), color_(color) {}

  int check() {
    Module m = read_module(o_.file);
    json docs = json::array();
    for (const Declaration& d : m.terms) {
      Term t = check_declaration(d, m, o_.file);
      if (o_.json)
        docs.push_back({{"name", d.name}, {"dom", d.dom.to_string()}, {"cod", d.cod.to_string()}, {"term", t.to_string()}});
      else
        out_ << d.name << " : " << homset(t) << " = " << t.to_string() << "\n";
    }
    if (o_.json) out_ << json{{"schema_version", kJsonSchemaVersion}, {"terms", docs}}.dump(2) << "\n";
    return 0;
  }

  int decide() {
    Module m = read_module(o_.file);
    if (!o_.batch.empty()) return batch(m);
    Term f = resolve(m, need(o_.left, "--left"), o_.file);
    Term g = resolve(m, need(o_.right, "--right"), o_.file);
    parallel(f, g);
    DecideResult r = decide_with_stats(f, g);
    if (o_.json) {
      json j = {{"schema_version", kJsonSchemaVersion}, {"left", o_.left}, {"right", o_.right}};
      j.update(verdict_json(r.verdict));
      j["stats"] = stats_json(r.stats);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << paint(r.verdict.to_string(), r.verdict.outcome, color_) << "\n";
      if (o_.witness && r.verdict.witness && r.verdict.witness->term)
        out_ << "witness: " << r.verdict.witness->term->to_string() << "\n";
      if (o_.stats)
        out_ << "calls: " << r.stats.calls << "  visits: " << r.stats.visits << "  steps: " << r.stats.steps() << "\n";
    }
    return exit_code(r.verdict);
  }

  int compose_cmd() {
    Module m = read_module(o_.file);
    Term f = resolve(m, need(o_.left, "--left"), o_.file);
    Term g = resolve(m, need(o_.right, "--right"), o_.file);
    if (f.cod() != g.dom())
      throw TypeFailure("cannot compose " + o_.left + " : " + homset(f) + " with " + o_.right + " : " + homset(g));
    Term h = compose(f, g);
    if (o_.json)
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"dom", h.dom().to_string()}, {"cod", h.cod().to_string()},
                   {"term", h.to_string()}}
                  .dump(2)
           << "\n";
    else
      out_ << h.to_string() << "\n";
    return 0;
  }

  int annotate_cmd() {
    Module m = read_module(o_.file);
    AnnotatedTerm a = annotate(resolve(m, need(o_.term, "--term"), o_.file));
    if (o_.json) {
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"annotation", annotation_json(a)}}.dump(2) << "\n";
    } else {
      print_annotation(a, 0, out_);
    }
    return 0;
  }

  int factor_cmd() {
    if ((o_.inj < 0) == (o_.proj < 0)) throw UsageError("factor needs exactly one of --inj and --proj");
    Module m = read_module(o_.file);
    Term t = resolve(m, need(o_.term, "--term"), o_.file);
    AnnotatedTerm a = annotate(t);
    std::optional<AnnotatedTerm> r;
    std::size_t visits = 0;
    if (o_.inj >= 0) {
      if (!t.cod().is_sum()) throw TypeFailure("factor --inj needs a sum codomain, got " + t.cod().to_string());
      r = factor_inj(a, o_.inj & 1, &visits);
    } else {
      if (!t.dom().is_prod()) throw TypeFailure("factor --proj needs a product domain, got " + t.dom().to_string());
      r = factor_proj(a, o_.proj & 1, &visits);
    }
    if (o_.json) {
      json j = {{"schema_version", kJsonSchemaVersion}, {"visits", visits}};
      j["factor"] = r ? json(r->term().to_string()) : json(nullptr);
      if (r) j["dom"] = r->dom().to_string(), j["cod"] = r->cod().to_string();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << (r ? r->term().to_string() + " : " + homset(r->term()) : std::string("none")) << "\n";
    }
    return r ? 0 : 1;
  }

  int enumerate_cmd() {
    GeneratorGraph graph;
    if (!o_.file.empty()) graph = read_module(o_.file).graph;
    ObjectType X = parse_type(need(o_.dom, "-X"));
    ObjectType A = parse_type(need(o_.cod, "-A"));
    check_generators(X, graph);
    check_generators(A, graph);
    Universe u(graph, options());
    auto [b, e] = u.homset_range(X, A);
    std::size_t n = e - b;
    std::size_t k = u.class_count(X, A);
    if (o_.json) {
      json terms = json::array();
      for (Universe::Id t = b; t < e; ++t) terms.push_back({{"term", u.term(t).to_string()}, {"class", u.class_id(t)}});
      out_ << json{{"schema_version", kJsonSchemaVersion},
                   {"dom", X.to_string()},
                   {"cod", A.to_string()},
                   {"count", n},
                   {"classes", k},
                   {"terms", terms}}
                  .dump(2)
           << "\n";
      return 0;
    }
    out_ << n << (n == 1 ? " term" : " terms");
    if (o_.classes) out_ << ", " << k << (k == 1 ? " class" : " classes");
    out_ << "\n";
    if (o_.list) {
      if (o_.classes) {
        std::vector<std::pair<Universe::Id, Universe::Id>> order;
        for (Universe::Id t = b; t < e; ++t) order.emplace_back(u.class_id(t), t);
        std::stable_sort(order.begin(), order.end(), [](auto x, auto y) { return x.first < y.first; });
        Universe::Id current = ~0u;
        for (auto [c, t] : order) {
          if (c != current) out_ << "class " << (c - u.class_id(b)) << ":\n";
          current = c;
          out_ << "  " << u.term(t).to_string() << "\n";
        }
      } else {
        for (Universe::Id t = b; t < e; ++t) out_ << u.term(t).to_string() << "\n";
      }
    }
    return 0;
  }

  int oracle_decide() {
    Module m = read_module(o_.file);
    Term f = resolve(m, need(o_.left, "--left"), o_.file);
    Term g = resolve(m, need(o_.right, "--right"), o_.file);
    parallel(f, g);
    Universe u(m.graph, options());
    bool same = u.same_class(f, g);
    Outcome o = same ? Outcome::Equal : Outcome::NotEqual;
    if (o_.json)
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"left", o_.left}, {"right", o_.right}, {"outcome", outcome_name(o)}}
                  .dump(2)
           << "\n";
    else
      out_ << paint(outcome_name(o), o, color_) << "\n";
    return same ? kExitEqual : kExitNotEqual;
  }

  int oracle_class() {
    Module m = read_module(o_.file);
    Term t = resolve(m, need(o_.term, "--term"), o_.file);
    Universe u(m.graph, options());
    EqClass c = u.class_of(t);
    if (o_.json) {
      json members = json::array();
      for (const Term& x : c.members) members.push_back(x.to_string());
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"canonical", c.canonical.to_string()}, {"members", members}}
                  .dump(2)
           << "\n";
      return 0;
    }
    out_ << c.members.size() << (c.members.size() == 1 ? " member" : " members") << ", canonical "
         << c.canonical.to_string() << "\n";
    for (const Term& x : c.members) out_ << "  " << x.to_string() << "\n";
    return 0;
  }

  int oracle_path() {
    Module m = read_module(o_.file);
    Term f = resolve(m, need(o_.left, "--left"), o_.file);
    Term g = resolve(m, need(o_.right, "--right"), o_.file);
    parallel(f, g);
    Universe u(m.graph, options());
    std::optional<CardinalPath> p = path_between(u, f, g);
    if (o_.json) {
      json j = {{"schema_version", kJsonSchemaVersion}, {"found", p.has_value()}};
      if (p) {
        j["steps"] = p->steps();
        j["elements"] = json::array();
        for (const auto& [c, t] : p->elements)
          j["elements"].push_back({{"corner", corner_name(c)}, {"term", t.to_string()}});
        j["bouncers"] = json::array();
        for (const Term& h : p->bouncers) j["bouncers"].push_back(h.to_string());
      }
      out_ << j.dump(2) << "\n";
    } else if (!p) {
      out_ << "no path\n";
    } else {
      out_ << p->steps() << (p->steps() == 1 ? " step" : " steps") << "\n";
      for (std::size_t k = 0; k < p->elements.size(); ++k) {
        if (k > 0) out_ << "  via " << p->bouncers[k - 1].to_string() << "\n";
        out_ << corner_name(p->elements[k].first) << ": " << p->elements[k].second.to_string() << "\n";
      }
    }
    return p ? 0 : 1;
  }

  int oracle_bouncers() {
    Module m = read_module(o_.file);
    Term f = resolve(m, need(o_.left, "--left"), o_.file);
    Term g = resolve(m, need(o_.right, "--right"), o_.file);
    Universe u(m.graph, options());
    std::vector<Term> hs;
    try {
      hs = u.find_bouncers(f, g, o_.i, o_.j);
    } catch (const std::invalid_argument& e) {
      throw TypeFailure(e.what());
    }
    if (o_.json) {
      json list = json::array();
      for (const Term& h : hs) list.push_back(h.to_string());
      out_ << json{{"schema_version", kJsonSchemaVersion}, {"bouncers", list}}.dump(2) << "\n";
    } else {
      out_ << hs.size() << (hs.size() == 1 ? " bouncer" : " bouncers") << "\n";
      for (const Term& h : hs) out_ << "  " << h.to_string() << " : " << homset(h) << "\n";
    }
    return hs.empty() ? 1 : 0;
  }

  int bench() {
    if (o_.min_height < 1 || o_.max_height < o_.min_height) throw UsageError("bad height range");
    out_ << "height,size_X,size_A,steps,micros\n";
    for (int h = o_.min_height; h <= o_.max_height; ++h) {
      BenchRow r = run_bench(bench_case(h), o_.repeat);
      out_ << r.height << "," << r.size_X << "," << r.size_A << "," << r.steps << "," << r.micros << "\n";
    }
    return 0;
  }

 private:
  int batch(const Module& m) {
    std::ifstream in(o_.batch);
    if (!in) throw InputError("cannot read " + o_.batch);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      std::istringstream ls(line);
      std::string a, b, extra;
      if (!(ls >> a)) continue;
      if (!(ls >> b) || (ls >> extra)) throw UsageError(o_.batch + ": each line needs two term names: " + line);
      pairs.emplace_back(a, b);
    }
    int code = kExitEqual;
    json results = json::array();
    for (const auto& [a, b] : pairs) {
      Term f = resolve(m, a, o_.file);
      Term g = resolve(m, b, o_.file);
      parallel(f, g);
      DecideResult r = decide_with_stats(f, g);
      if (code == kExitEqual) code = exit_code(r.verdict);
      if (o_.json) {
        json j = {{"left", a}, {"right", b}};
        j.update(verdict_json(r.verdict));
        if (o_.stats) j["stats"] = stats_json(r.stats);
        results.push_back(j);
      } else {
        out_ << a << " " << b << ": " << paint(r.verdict.to_string(), r.verdict.outcome, color_);
        if (o_.witness && r.verdict.witness && r.verdict.witness->term)
          out_ << "  witness " << r.verdict.witness->term->to_string();
        if (o_.stats) out_ << "  steps " << r.stats.steps();
        out_ << "\n";
      }
    }
    if (o_.json) out_ << json{{"schema_version", kJsonSchemaVersion}, {"results", results}}.dump(2) << "\n";
    return code;
  }

  std::optional<CardinalPath> path_between(Universe& u, const Term& f, const Term& g) {
    try {
      return u.cardinal_path(f, g);
    } catch (const std::invalid_argument& e) {
      throw TypeFailure(e.what());
    }
  }

  static const std::string& need(const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing ") + flag);
    return v;
  }

  void parallel(const Term& f, const Term& g) const {
    if (f.dom() != g.dom() || f.cod() != g.cod())
      throw TypeFailure(o_.left + " : " + homset(f) + " and " + o_.right + " : " + homset(g) + " are not parallel");
  }

  OracleOptions options() const { return OracleOptions{o_.guard, o_.max_path}; }

  const Options& o_;
  std::ostream& out_;
  bool color_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  Options o;
  CLI::App app{"Equality of maps in free bicartesian categories", "sigmapi"};
  app.require_subcommand(1);

  auto file = [&](CLI::App* c) { c->add_option("file", o.file, "declaration file (.spt)")->required(); };
  auto pair = [&](CLI::App* c) {
    c->add_option("--left", o.left, "name of the left term");
    c->add_option("--right", o.right, "name of the right term");
  };
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "write JSON"); };
  auto guard = [&](CLI::App* c) {
    c->add_option("--guard", o.guard, "maximum number of terms an enumeration may create")->capture_default_str();
    c->add_option("--max-path", o.max_path, "longest generator path enumerated on cyclic graphs")->capture_default_str();
  };
  auto homset_flags = [&](CLI::App* c) {
    c->add_option("-X,--dom", o.dom, "domain type")->required();
    c->add_option("-A,--cod", o.cod, "codomain type")->required();
    c->add_flag("--classes", o.classes, "count equivalence classes");
    c->add_flag("--list", o.list, "print the terms");
  };

  auto* check = app.add_subcommand("check", "type-check every declaration and print its cut-free form");
  file(check);
  json_flag(check);

  auto* decide = app.add_subcommand("decide", "decide equality of two declared terms");
  file(decide);
  pair(decide);
  json_flag(decide);
  decide->add_flag("--witness", o.witness, "print the witness term");
  decide->add_flag("--stats", o.stats, "print step counts");
  decide->add_option("--batch", o.batch, "file of 'left right' name pairs, one per line");

  auto* comp = app.add_subcommand("compose", "cut-free form of left ; right");
  file(comp);
  pair(comp);
  json_flag(comp);

  auto* ann = app.add_subcommand("annotate", "pointed / copointed annotation of a term");
  file(ann);
  ann->add_option("--term", o.term, "name of the term");
  json_flag(ann);

  auto* fac = app.add_subcommand("factor", "factor a term through an injection or a projection");
  file(fac);
  fac->add_option("--term", o.term, "name of the term");
  fac->add_option("--inj", o.inj, "factor through s_j")->check(CLI::Range(0, 1));
  fac->add_option("--proj", o.proj, "factor through p_i")->check(CLI::Range(0, 1));
  json_flag(fac);

  auto* en = app.add_subcommand("enumerate", "enumerate the cut-free terms of a homset");
  homset_flags(en);
  en->add_option("--file", o.file, "declaration file providing a generator graph");
  guard(en);
  json_flag(en);

  auto* orc = app.add_subcommand("oracle", "ground truth by exhaustive enumeration");
  orc->require_subcommand(1);
  auto* od = orc->add_subcommand("decide", "compare the classes of two terms");
  file(od);
  pair(od);
  guard(od);
  json_flag(od);
  auto* oc = orc->add_subcommand("class", "list the class of a term");
  file(oc);
  oc->add_option("--term", o.term, "name of the term");
  guard(oc);
  json_flag(oc);
  auto* oe = orc->add_subcommand("enumerate", "enumerate a homset with its classes");
  homset_flags(oe);
  oe->add_option("--file", o.file, "declaration file providing a generator graph");
  guard(oe);
  json_flag(oe);
  auto* op = orc->add_subcommand("path", "shortest path in the diagram of cardinals");
  file(op);
  pair(op);
  guard(op);
  json_flag(op);
  auto* ob = orc->add_subcommand("bouncers", "every h with p_i h = left and s_j h = right");
  file(ob);
  pair(ob);
  ob->add_option("-i", o.i, "projection index")->check(CLI::Range(0, 1));
  ob->add_option("-j", o.j, "injection index")->check(CLI::Range(0, 1));
  guard(ob);
  json_flag(ob);

  auto* bench = app.add_subcommand("bench", "run the balanced-type benchmark family, CSV on stdout");
  bench->add_option("--min-height", o.min_height)->capture_default_str();
  bench->add_option("--max-height", o.max_height)->capture_default_str();
  bench->add_option("--repeat", o.repeat, "keep the fastest of N runs")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  Runner r(o, out, color);
  try {
    if (*check) return r.check();
    if (*decide) return r.decide();
    if (*comp) return r.compose_cmd();
    if (*ann) return r.annotate_cmd();
    if (*fac) return r.factor_cmd();
    if (*en || *oe) return r.enumerate_cmd();
    if (*od) return r.oracle_decide();
    if (*oc) return r.oracle_class();
    if (*op) return r.oracle_path();
    if (*ob) return r.oracle_bouncers();
    if (*bench) return r.bench();
  } catch (const UsageError& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "sigmapi: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TypeFailure& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitType;
  } catch (const TypingException& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitType;
  } catch (const InputError& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitType;
  } catch (const GuardExceeded& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "sigmapi: " << e.what() << "\n";
    return kExitType;
  }
  return kExitUsage;
}

}  // namespace sigmapi
