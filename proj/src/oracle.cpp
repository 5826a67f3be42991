#include "atomized/oracle.hpp"

#include <algorithm>

namespace atomized {

namespace oracle {

namespace {

TermCode checked_code(const Term& t, const Signature& sig) {
  if (t.universe() != sig.size())
    throw Error(ErrorKind::SignatureMismatch, "duple does not belong to the signature");
  return code_of(t);
}

// Segment of a term computed straight from the definition (no linearity shortcut).
IndexSet direct_segment(const Model& m, TermCode code) {
  const Term t = term_of(m.constants(), code);
  IndexSet seg(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.atoms()[i].upper().intersects(t.comps())) seg.set(i);
  return seg;
}

std::string describe(const Signature& sig, TermCode code) {
  std::string out;
  for (const auto& n : names_of(sig, IndexSet::from_mask(sig.size(), code))) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

}  // namespace

TermRelation closure(const Signature& sig, std::span<const Duple> positives, std::size_t cap) {
  require_enumerable(sig.size(), cap);
  TermRelation rel = containment_relation(sig.size());
  for (const auto& d : positives) rel.insert(checked_code(d.left, sig), checked_code(d.right, sig));

  const auto n = static_cast<TermCode>(rel.term_count());
  std::size_t size = rel.pair_count();
  for (;;) {
    // Join-monotonicity: s <= t gives s+u <= t+u.
    for (TermCode s = 1; s <= n; ++s) {
      const auto targets = rel.row(s).indices();
      for (auto ti : targets) {
        const TermCode t = ti + 1;
        for (TermCode u = 1; u <= n; ++u) rel.insert(s | u, t | u);
      }
    }
    // Transitivity (Warshall).
    for (TermCode k = 1; k <= n; ++k)
      for (TermCode i = 1; i <= n; ++i)
        if (rel.contains(i, k)) rel.row(i) |= rel.row(k);

    const std::size_t next = rel.pair_count();
    if (next == size) break;
    size = next;
  }
  return rel;
}

TermRelation congruence(const Signature& sig, std::span<const Duple> positives) {
  if (sig.size() > kCongruenceCap)
    throw Error(ErrorKind::CapExceeded, "congruence oracle needs |C| <= 3");
  const std::size_t n = (std::size_t{1} << sig.size()) - 1;
  std::vector<std::pair<TermCode, TermCode>> required;
  for (const auto& d : positives) required.emplace_back(checked_code(d.left, sig), checked_code(d.right, sig));

  // entailed[s][t] stays true while every admissible quotient has s <= t.
  std::vector<std::vector<bool>> entailed(n + 1, std::vector<bool>(n + 1, true));

  // Restricted growth strings enumerate set partitions of the terms 1..n.
  std::vector<std::size_t> block(n + 1, 0);
  std::vector<std::size_t> prefix_max(n + 1, 0);
  auto le = [&](TermCode s, TermCode t) { return block[s | t] == block[t]; };

  for (;;) {
    bool compatible = true;
    for (TermCode x = 1; x <= n && compatible; ++x)
      for (TermCode y = x + 1; y <= n && compatible; ++y) {
        if (block[x] != block[y]) continue;
        for (TermCode z = 1; z <= n && compatible; ++z) compatible = block[x | z] == block[y | z];
      }
    const bool satisfies =
        compatible && std::all_of(required.begin(), required.end(), [&](auto& p) { return le(p.first, p.second); });
    if (satisfies)
      for (TermCode s = 1; s <= n; ++s)
        for (TermCode t = 1; t <= n; ++t)
          if (!le(s, t)) entailed[s][t] = false;

    // Next restricted growth string over positions 2..n (position 1 stays in block 0).
    std::size_t pos = n;
    while (pos >= 2 && block[pos] == prefix_max[pos - 1] + 1) --pos;
    if (pos < 2) break;
    ++block[pos];
    prefix_max[pos] = std::max(prefix_max[pos - 1], block[pos]);
    for (std::size_t k = pos + 1; k <= n; ++k) {
      block[k] = 0;
      prefix_max[k] = prefix_max[k - 1];
    }
  }

  TermRelation rel(sig.size());
  for (TermCode s = 1; s <= n; ++s)
    for (TermCode t = 1; t <= n; ++t)
      if (entailed[s][t]) rel.insert(s, t);
  return rel;
}

bool AxiomReport::passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const AxiomResult& r) { return r.status == AxiomStatus::Fail; });
}

AxiomReport axiom_check(const Model& m, std::size_t cap) {
  require_enumerable(m.constants(), cap);
  const auto& sig = m.signature();
  AxiomReport report;

  {
    AxiomResult r{"AS1", AxiomStatus::Pass, "every atom is below some constant"};
    for (const auto& a : m.atoms())
      if (a.upper().empty() || a.universe() != sig.size()) {
        r = {"AS1", AxiomStatus::Fail, "an atom has an empty upper segment"};
        break;
      }
    report.results.push_back(r);
  }

  report.results.push_back({"AS2", AxiomStatus::Structural, "atoms are never above regular elements"});

  const TermCode n = (TermCode{1} << m.constants()) - 1;
  std::vector<IndexSet> segs;
  segs.reserve(n);
  for (TermCode code = 1; code <= n; ++code) segs.push_back(direct_segment(m, code));

  {
    AxiomResult r{"AS3", AxiomStatus::Pass, "atom order agrees with the join order on all term pairs"};
    for (TermCode s = 1; s <= n && r.status == AxiomStatus::Pass; ++s)
      for (TermCode t = 1; t <= n; ++t) {
        const bool by_atoms = segs[s - 1].is_subset_of(segs[t - 1]);
        const bool by_join = segs[(s | t) - 1] == segs[t - 1];
        if (by_atoms != by_join) {
          r = {"AS3", AxiomStatus::Fail, "order mismatch on (" + describe(sig, s) + ", " + describe(sig, t) + ")"};
          break;
        }
      }
    report.results.push_back(r);
  }

  {
    AxiomResult r{"AS4", AxiomStatus::Pass, "segment of a sum is the union of segments"};
    for (TermCode s = 1; s <= n && r.status == AxiomStatus::Pass; ++s)
      for (TermCode t = s; t <= n; ++t)
        if (!(segs[(s | t) - 1] == (segs[s - 1] | segs[t - 1]))) {
          r = {"AS4", AxiomStatus::Fail, "linearity fails on (" + describe(sig, s) + ", " + describe(sig, t) + ")"};
          break;
        }
    report.results.push_back(r);
  }

  {
    AxiomResult r{"AS5", AxiomStatus::Pass, "no two atoms share an upper segment"};
    const auto atoms = m.atoms();
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
      if (atoms[i] == atoms[i + 1]) {
        r = {"AS5", AxiomStatus::Fail, "duplicate atom {" + describe(sig, atoms[i].upper().to_mask()) + "}"};
        break;
      }
    report.results.push_back(r);
  }

  {
    IndexSet covered(sig.size());
    for (const auto& a : m.atoms()) covered |= a.upper();
    const IndexSet missing = sig.all() - covered;
    if (missing.empty())
      report.results.push_back({"AS6", AxiomStatus::Pass, "every constant has an atom below it"});
    else
      report.results.push_back(
          {"AS6", AxiomStatus::Fail, "uncovered constants: " + describe(sig, missing.to_mask())});
  }
  return report;
}

}  // namespace oracle

const char* to_string(oracle::AxiomStatus s) noexcept {
  switch (s) {
    case oracle::AxiomStatus::Pass: return "pass";
    case oracle::AxiomStatus::Fail: return "FAIL";
    case oracle::AxiomStatus::Structural: return "structural";
  }
  return "?";
}

}  // namespace atomized
