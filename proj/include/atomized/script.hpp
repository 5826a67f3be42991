#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atomized/crossing.hpp"
#include "atomized/model.hpp"

namespace atomized {

/// Line-oriented script:
///
///   constants <name>+
///   atom <name>+
///   assert <term> <= <term>
///   deny <term> <= <term>
///   show atoms|elements|theory
///   # comment (also after a statement)
///
/// A term is one or more constant names; juxtaposition is the semilattice sum.
/// `constants` lines come first, `atom` lines before any `assert`.
namespace script {

struct AtomDecl {
  Atom atom;
};
struct Assertion {
  Duple duple;
};
struct Denial {
  Duple duple;
};
enum class ShowWhat { Atoms, Elements, Theory };
struct Show {
  ShowWhat what;
};

struct Statement {
  std::size_t line;
  std::variant<AtomDecl, Assertion, Denial, Show> body;
};

struct Script {
  Signature signature;
  std::vector<Statement> statements;

  bool has_atoms() const;
  std::vector<Atom> atoms() const;
  std::vector<Duple> positives() const;
  std::vector<Duple> negatives() const;
};

/// Throws ParseError with ErrorKind::ParseError or ErrorKind::UndeclaredConstant.
Script parse(std::string_view text);

/// Term and duple literals against a known signature (line reported as `line`).
Term parse_term(const Signature& sig, std::string_view text, std::size_t line = 1);
Duple parse_duple(const Signature& sig, std::string_view text, std::size_t line = 1);

/// Writes a term as space-separated names.
std::string format_term(const Signature& sig, const Term& t);

struct Result {
  Model model;
  std::vector<NegativeVerdict> denials;

  bool consistent() const;
};

/// Runs the script: the starting model is the declared atoms (or the free
/// model), assertions are crossed in script order, `show` writes the current
/// model to `out`, and denials are judged against the final model.
Result execute(const Script& s, ReducePolicy policy, std::ostream& out, std::size_t cap = kDefaultEnumerationCap);

void show(const Model& m, ShowWhat what, std::ostream& out, std::size_t cap = kDefaultEnumerationCap);

}  // namespace script

}  // namespace atomized
