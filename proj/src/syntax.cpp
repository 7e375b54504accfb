#include "sigmapi/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sigmapi {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

const Declaration* Module::find(const std::string& name) const {
  for (const auto& d : terms)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

enum class Tok { Ident, Zero, One, Sym, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string digits(s.substr(i, j - i));
      if (digits != "0" && digits != "1") throw ParseError(pos, "unexpected number '" + digits + "'");
      out.push_back({digits == "0" ? Tok::Zero : Tok::One, digits, pos});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", pos});
      advance(2);
      continue;
    }
    static const std::string_view symbols = "!?<>{}()[],;:+*@=";
    if (symbols.find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), pos});
      advance(1);
      continue;
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ObjectType type() {
    ObjectType left = product();
    if (accept_sym("+")) return ObjectType::sum(std::move(left), type());
    return left;
  }

  RawTerm term() {
    RawTerm left = unary();
    while (at_sym(";") && !ends_declaration(pos_ + 1)) {
      SourcePos p = peek().pos;
      ++pos_;
      RawTerm right = unary();
      left = RawTerm::cut(std::move(left), std::move(right));
      left.pos = p;
    }
    return left;
  }

  Module module() {
    Module m;
    if (at_ident("graph")) graph(m.graph);
    while (!at_end()) {
      if (!at_ident("term")) fail("expected 'term'");
      Declaration d;
      d.pos = peek().pos;
      ++pos_;
      d.name = ident("a term name");
      if (m.find(d.name)) throw ParseError(d.pos, "duplicate term '" + d.name + "'");
      expect_sym(":");
      d.dom = type();
      expect(Tok::Arrow, "'->'");
      d.cod = type();
      expect_sym("=");
      d.body = term();
      if (!at_end()) expect_sym(";");
      m.terms.push_back(std::move(d));
    }
    return m;
  }

  void finish() {
    accept_sym(";");
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }

  bool ends_declaration(std::size_t k) const {
    const Token& t = toks_[k];
    return t.kind == Tok::End || (t.kind == Tok::Ident && (t.text == "term" || t.text == "graph"));
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, what + ", found " + found);
  }

  bool accept_sym(const char* s) {
    if (!at_sym(s)) return false;
    ++pos_;
    return true;
  }

  void expect_sym(const char* s) {
    if (!accept_sym(s)) fail(std::string("expected '") + s + "'");
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  ObjectType product() {
    ObjectType left = atom();
    if (accept_sym("*")) return ObjectType::prod(std::move(left), product());
    return left;
  }

  ObjectType atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return ObjectType::zero();
      case Tok::One: ++pos_; return ObjectType::one();
      case Tok::Ident: ++pos_; return ObjectType::gen(t.text);
      default: break;
    }
    if (accept_sym("(")) {
      ObjectType inner = type();
      expect_sym(")");
      return inner;
    }
    fail("expected a type");
  }

  RawTerm unary() {
    const Token& t = peek();
    SourcePos p = t.pos;
    RawTerm out;
    if (t.kind == Tok::Sym) {
      char c = t.text[0];
      ++pos_;
      switch (c) {
        case '!': out = RawTerm::bang(); break;
        case '?': out = RawTerm::quest(); break;
        case '<':
        case '{': {
          RawTerm a = term();
          expect_sym(",");
          RawTerm b = term();
          expect_sym(c == '<' ? ">" : "}");
          out = c == '<' ? RawTerm::tuple(std::move(a), std::move(b)) : RawTerm::cotuple(std::move(a), std::move(b));
          break;
        }
        case '(': {
          out = term();
          expect_sym(")");
          return out;
        }
        case '@': {
          std::vector<std::string> path;
          if (accept_sym("[")) {
            if (!accept_sym("]")) {
              path.push_back(ident("an edge name"));
              while (accept_sym(",")) path.push_back(ident("an edge name"));
              expect_sym("]");
            }
          } else {
            path.push_back(ident("an edge name"));
          }
          out = RawTerm::gen(std::move(path));
          break;
        }
        default:
          --pos_;
          fail("expected a term");
      }
      out.pos = p;
      return out;
    }
    if (t.kind == Tok::Ident) {
      const std::string& w = t.text;
      if (w.size() == 2 && (w[0] == 'p' || w[0] == 's') && (w[1] == '0' || w[1] == '1')) {
        ++pos_;
        int k = w[1] - '0';
        RawTerm body = unary();
        out = w[0] == 'p' ? RawTerm::proj(k, std::move(body)) : RawTerm::inj(k, std::move(body));
        out.pos = p;
        return out;
      }
      if (w == "id") {
        ++pos_;
        expect_sym(":");
        out = RawTerm::id(type());
        out.pos = p;
        return out;
      }
    }
    fail("expected a term");
  }

  void graph(GeneratorGraph& g) {
    ++pos_;
    expect_sym("{");
    while (!accept_sym("}")) {
      SourcePos p = peek().pos;
      try {
        if (at_ident("node")) {
          ++pos_;
          g.add_node(ident("a node name"));
        } else if (at_ident("edge")) {
          ++pos_;
          std::string name = ident("an edge name");
          expect_sym(":");
          std::string src = ident("a node name");
          expect(Tok::Arrow, "'->'");
          std::string tgt = ident("a node name");
          g.add_edge(name, src, tgt);
        } else {
          fail("expected 'node', 'edge' or '}'");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(p, e.what());
      }
      expect_sym(";");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjectType parse_type(std::string_view text) {
  Parser p(text);
  ObjectType t = p.type();
  p.finish();
  return t;
}

RawTerm parse_term(std::string_view text) {
  Parser p(text);
  RawTerm t = p.term();
  p.finish();
  return t;
}

Module parse_module(std::string_view text) { return Parser(text).module(); }

Module load_module(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_module(ss.str());
}

}  // namespace sigmapi
