#pragma once

#include <cstddef>
#include <optional>

#include "sigmapi/annotate.hpp"

namespace sigmapi {

/// f' : dom(f) -> A_j with s_j f' = f, for f : X -> A0 + A1, if one exists.
///
///   s_j b          -> b
///   s_{1-j} b      -> c ; ?  when f is copointed with copoint c, else none
///   {f1, f2}       -> {f1', f2'}  when both branches factor
///   p_i b          -> c ; ?  when f is copointed, else p_i b'
///   ?              -> ?
///
/// `visits` counts the nodes of f looked at; results are cached in f, so a
/// repeated call costs nothing. Throws std::invalid_argument unless cod(f) is a sum.
std::optional<AnnotatedTerm> factor_inj(const AnnotatedTerm& f, int j, std::size_t* visits = nullptr);

/// f' : X_i -> cod(f) with p_i f' = f, for f : X0 * X1 -> A (the dual, using points).
std::optional<AnnotatedTerm> factor_proj(const AnnotatedTerm& f, int i, std::size_t* visits = nullptr);

}  // namespace sigmapi
