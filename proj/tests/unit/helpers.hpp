#pragma once

#include <string>

#include "sigmapi/compose.hpp"
#include "sigmapi/syntax.hpp"

namespace test {

inline sigmapi::ObjectType T(const std::string& s) { return sigmapi::parse_type(s); }

/// A cut-free term from its surface syntax, checked against dom -> cod.
inline sigmapi::Term term(const std::string& text, const std::string& dom, const std::string& cod) {
  return sigmapi::check_term(sigmapi::parse_term(text), T(dom), T(cod));
}

inline std::string data(const std::string& name) { return std::string(SIGMAPI_TEST_DATA) + "/" + name; }

}  // namespace test
