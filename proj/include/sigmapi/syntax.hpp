#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigmapi/graph.hpp"
#include "sigmapi/terms.hpp"
#include "sigmapi/types.hpp"

namespace sigmapi {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  const SourcePos& pos() const { return pos_; }
  /// The message without the "line:column: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

/// Type syntax: 0, 1, generator names, T + T, T * T, ( T ).
/// `*` binds tighter than `+`; both associate to the right.
ObjectType parse_type(std::string_view text);

/// Term syntax:
///   !   ?   p0 t   p1 t   s0 t   s1 t   <t, t>   {t, t}
///   @k   @[k, m, ...]   @[]   id:T   t ; t   ( t )
/// `;` is composition in diagrammatic order and associates to the left.
RawTerm parse_term(std::string_view text);

struct Declaration {
  std::string name;
  ObjectType dom;
  ObjectType cod;
  RawTerm body;
  SourcePos pos;
};

/// A parsed .spt file: an optional `graph { ... }` header followed by
/// `term name : T -> T = TERM ;` declarations. `#` starts a line comment.
struct Module {
  GeneratorGraph graph;
  std::vector<Declaration> terms;

  const Declaration* find(const std::string& name) const;
};

Module parse_module(std::string_view text);
/// Reads and parses a file; throws std::runtime_error when it cannot be read.
Module load_module(const std::string& path);

}  // namespace sigmapi
