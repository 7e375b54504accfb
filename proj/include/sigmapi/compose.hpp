#pragma once

#include "sigmapi/graph.hpp"
#include "sigmapi/terms.hpp"

namespace sigmapi {

/// Cut elimination. `typed` must come out of `infer`. The result is cut-free,
/// identity-free and has the same homset.
///
/// Rules, tried in this order at each cut f ; g:
///   id ; f -> f      f ; id -> f      ? ; f -> ?      f ; ! -> !
///   <f0, f1> ; p_i g -> f_i ; g      s_j f ; {g0, g1} -> f ; g_j      @p ; @q -> @pq
///   f ; s_j g -> s_j (f ; g)         f ; <g, h> -> <f ; g, f ; h>
///   p_i f ; g -> p_i (f ; g)         {f, g} ; h -> {f ; h, g ; h}
/// Identities left over once every cut is gone are expanded with `identity`.
Term eliminate(const RawTerm& typed);

/// f ; g for cut-free terms. Throws std::invalid_argument if cod(f) != dom(g).
Term compose(const Term& f, const Term& g);

/// The cut-free identity on `t`:
///   id(0) = ?, id(1) = !, id(A * B) = <p0 id(A), p1 id(B)>,
///   id(A + B) = {s0 id(A), s1 id(B)}, id(x) = @[]
/// with p_i ! and s_j ? written as ! and ?.
Term identity(const ObjectType& t);

/// infer followed by eliminate.
Term check_term(const RawTerm& raw, const ObjectType& dom, const ObjectType& cod,
                const GeneratorGraph& graph = GeneratorGraph{});

}  // namespace sigmapi
