#include "atomized/script.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

namespace atomized::script {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) return line.substr(0, hash);
  return line;
}

Term term_from_words(const Signature& sig, const std::vector<std::string>& words, std::size_t line) {
  if (words.empty()) throw ParseError(ErrorKind::ParseError, line, "expected a term");
  IndexSet comps(sig.size());
  for (const auto& w : words) {
    if (w.find("<=") != std::string::npos)
      throw ParseError(ErrorKind::ParseError, line, "'<=' must be separated by whitespace");
    auto i = sig.find(w);
    if (!i) throw ParseError(ErrorKind::UndeclaredConstant, line, "undeclared constant '" + w + "'");
    comps.set(*i);
  }
  return Term(std::move(comps));
}

Duple duple_from_words(const Signature& sig, const std::vector<std::string>& words, std::size_t line) {
  const auto sep = std::find(words.begin(), words.end(), "<=");
  if (sep == words.end()) throw ParseError(ErrorKind::ParseError, line, "expected '<term> <= <term>'");
  if (std::find(sep + 1, words.end(), "<=") != words.end())
    throw ParseError(ErrorKind::ParseError, line, "more than one '<='");
  std::vector<std::string> left(words.begin(), sep);
  std::vector<std::string> right(sep + 1, words.end());
  if (left.empty() || right.empty()) throw ParseError(ErrorKind::ParseError, line, "expected '<term> <= <term>'");
  Term l = term_from_words(sig, left, line);
  Term r = term_from_words(sig, right, line);
  return {std::move(l), std::move(r)};
}

}  // namespace

bool Script::has_atoms() const {
  return std::any_of(statements.begin(), statements.end(),
                     [](const Statement& s) { return std::holds_alternative<AtomDecl>(s.body); });
}

std::vector<Atom> Script::atoms() const {
  std::vector<Atom> out;
  for (const auto& s : statements)
    if (auto* a = std::get_if<AtomDecl>(&s.body)) out.push_back(a->atom);
  return out;
}

std::vector<Duple> Script::positives() const {
  std::vector<Duple> out;
  for (const auto& s : statements)
    if (auto* a = std::get_if<Assertion>(&s.body)) out.push_back(a->duple);
  return out;
}

std::vector<Duple> Script::negatives() const {
  std::vector<Duple> out;
  for (const auto& s : statements)
    if (auto* d = std::get_if<Denial>(&s.body)) out.push_back(d->duple);
  return out;
}

Script parse(std::string_view text) {
  std::vector<std::string> names;
  std::optional<Signature> sig;
  std::vector<Statement> statements;
  bool asserted = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto words = split_words(strip_comment(raw));
    if (words.empty()) continue;
    const std::string& keyword = words.front();
    const std::vector<std::string> args(words.begin() + 1, words.end());

    if (keyword == "constants") {
      if (sig) throw ParseError(ErrorKind::ParseError, line_no, "constants must be declared before any statement");
      if (args.empty()) throw ParseError(ErrorKind::ParseError, line_no, "'constants' needs at least one name");
      for (const auto& n : args) {
        if (!is_valid_constant_name(n))
          throw ParseError(ErrorKind::ParseError, line_no, "invalid constant name '" + n + "'");
        if (std::find(names.begin(), names.end(), n) != names.end())
          throw ParseError(ErrorKind::ParseError, line_no, "constant '" + n + "' declared twice");
        names.push_back(n);
      }
      continue;
    }

    if (!sig) {
      if (names.empty()) throw ParseError(ErrorKind::ParseError, line_no, "no constants declared");
      sig.emplace(names);
    }

    if (keyword == "atom") {
      if (asserted) throw ParseError(ErrorKind::ParseError, line_no, "atom declarations must precede assertions");
      statements.push_back({line_no, AtomDecl{Atom(term_from_words(*sig, args, line_no).comps())}});
    } else if (keyword == "assert") {
      asserted = true;
      statements.push_back({line_no, Assertion{duple_from_words(*sig, args, line_no)}});
    } else if (keyword == "deny") {
      statements.push_back({line_no, Denial{duple_from_words(*sig, args, line_no)}});
    } else if (keyword == "show") {
      if (args.size() != 1) throw ParseError(ErrorKind::ParseError, line_no, "expected 'show atoms|elements|theory'");
      ShowWhat what;
      if (args[0] == "atoms") what = ShowWhat::Atoms;
      else if (args[0] == "elements") what = ShowWhat::Elements;
      else if (args[0] == "theory") what = ShowWhat::Theory;
      else throw ParseError(ErrorKind::ParseError, line_no, "unknown show target '" + args[0] + "'");
      statements.push_back({line_no, Show{what}});
    } else {
      throw ParseError(ErrorKind::ParseError, line_no, "unknown statement '" + keyword + "'");
    }
  }

  if (!sig) {
    if (names.empty()) throw ParseError(ErrorKind::ParseError, line_no, "script declares no constants");
    sig.emplace(names);
  }
  return Script{std::move(*sig), std::move(statements)};
}

Term parse_term(const Signature& sig, std::string_view text, std::size_t line) {
  return term_from_words(sig, split_words(text), line);
}

Duple parse_duple(const Signature& sig, std::string_view text, std::size_t line) {
  return duple_from_words(sig, split_words(text), line);
}

std::string format_term(const Signature& sig, const Term& t) {
  std::string out;
  t.comps().for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += sig.name(i);
  });
  return out;
}

bool Result::consistent() const {
  return std::none_of(denials.begin(), denials.end(),
                      [](const NegativeVerdict& v) { return v.verdict == Verdict::EntailedPositive; });
}

void show(const Model& m, ShowWhat what, std::ostream& out, std::size_t cap) {
  const auto& sig = m.signature();
  switch (what) {
    case ShowWhat::Atoms:
      for (const auto& a : m.atoms()) out << "atom " << format_term(sig, Term(a.upper())) << '\n';
      break;
    case ShowWhat::Elements:
      for (const auto& k : enumerate_elements(m, cap)) {
        out << "element " << format_term(sig, k.representative) << ":";
        for (std::size_t i = 0; i < k.members.size(); ++i)
          out << (i == 0 ? " " : " = ") << format_term(sig, k.members[i]);
        out << '\n';
      }
      break;
    case ShowWhat::Theory: {
      // Containment pairs hold in every model; only the rest is printed.
      const auto theory = enumerate_theory(m, cap);
      for (const auto& d : theory.positives())
        if (!d.left.comps().is_subset_of(d.right.comps()))
          out << format_term(sig, d.left) << " <= " << format_term(sig, d.right) << '\n';
      break;
    }
  }
}

Result execute(const Script& s, ReducePolicy policy, std::ostream& out, std::size_t cap) {
  Model current = s.has_atoms() ? Model::make(s.signature, s.atoms()) : free_model(s.signature);
  for (const auto& st : s.statements) {
    if (auto* a = std::get_if<Assertion>(&st.body)) {
      current = full_crossing(current, a->duple);
      if (policy == ReducePolicy::AfterEach) current = reduce(current);
    } else if (auto* sh = std::get_if<Show>(&st.body)) {
      show(current, sh->what, out, cap);
    }
  }
  if (policy == ReducePolicy::AtEnd) current = reduce(current);

  Result r{std::move(current), {}};
  for (const auto& d : s.negatives())
    r.denials.push_back(
        {d, entails(r.model, d.left, d.right) ? Verdict::EntailedPositive : Verdict::Satisfiable});
  return r;
}

}  // namespace atomized::script
