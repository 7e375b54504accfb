#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigmapi/annotate.hpp"

namespace sigmapi {

enum class Outcome : std::uint8_t { Equal, NotEqual, RequiresOracle };

enum class WitnessKind : std::uint8_t { Disconnect, SharedPoint, SharedCopoint, Bouncer, SyntacticRecursion };

/// Why two terms were found equal. `term` is the disconnect, the shared point
/// or copoint, or the bouncer h (with p_i h on one side and s_j h on the other).
struct Witness {
  WitnessKind kind = WitnessKind::SyntacticRecursion;
  std::optional<Term> term;
};

enum class Reason : std::uint8_t { None, CornerMismatch, PointMismatch, CopointMismatch, LiftFailure };

struct Verdict {
  Outcome outcome = Outcome::Equal;
  std::optional<Witness> witness;  // Equal only
  Reason reason = Reason::None;    // NotEqual only
  /// Summands / factors chosen by domain and codomain decomposition on the
  /// way to the failing subproblem, outermost first.
  std::vector<int> components;

  bool equal() const { return outcome == Outcome::Equal; }
  /// corner-mismatch | point-mismatch | copoint-mismatch | lift-failure, or
  /// "component k" when the failure sits below a decomposition.
  std::string tag() const;
  /// "Equal (disconnect)", "NotEqual (component 0: corner-mismatch)", "RequiresOracle".
  std::string to_string() const;
};

const char* outcome_name(Outcome o);
const char* witness_name(WitnessKind k);
const char* reason_name(Reason r);

struct DecideStats {
  std::size_t calls = 0;   // invocations of equal / equivalent
  std::size_t visits = 0;  // term nodes looked at by annotation, decomposition and factoring
  std::size_t steps() const { return calls + visits; }
};

/// Decides f = g in the free category without generators.
///
/// Domain sums are split first, then codomain products. What is left has a
/// domain that is 1 or a product and a codomain that is 0 or a sum; there the
/// pointed / copointed bits decide, and definite maps are compared by their
/// outer injection or projection, using `equivalent` across a corner.
/// Terms with generators give RequiresOracle.
/// Throws std::invalid_argument if the homsets differ.
Verdict equal(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats* stats = nullptr);
Verdict equal(const Term& f, const Term& g, DecideStats* stats = nullptr);

/// f = s_j f0 against g = p_i g0 (both X0 * X1 -> A0 + A1). Lifts f through
/// p_i and g through s_j into Hom(X_i, A_j) and compares the lifts; a missing
/// lift means NotEqual for definite inputs. Indefinite inputs whose lifts do
/// not meet are handed back to `equal`.
/// Throws std::invalid_argument when the shapes are not s_j / p_i.
Verdict equivalent(const AnnotatedTerm& f, const AnnotatedTerm& g, DecideStats* stats = nullptr);

struct DecideResult {
  Verdict verdict;
  DecideStats stats;
};

/// Annotates both terms and decides, counting every step.
DecideResult decide_with_stats(const Term& f, const Term& g);

/// s_k ; f for dom(f) = X0 + X1, cut-free. Cached in f.
const AnnotatedTerm& restrict_dom(const AnnotatedTerm& f, int k, std::size_t* visits = nullptr);
/// f ; p_k for cod(f) = A0 * A1, cut-free. Cached in f.
const AnnotatedTerm& restrict_cod(const AnnotatedTerm& f, int k, std::size_t* visits = nullptr);

/// s_j : A_j -> A0 + A1 is monic iff A_{1-j} is not pointed or A_j is pointed.
bool injection_monic(const ObjectType& sum, int j);
/// p_i : X0 * X1 -> X_i is epic iff X_{1-i} is not copointed or X_i is copointed.
bool projection_epic(const ObjectType& prod, int i);

}  // namespace sigmapi
