#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "g2twist/verify.hpp"

namespace g2t {

namespace {

Rational frac(std::int64_t a, std::int64_t b) {
  Rational x(a, b);
  x.canonicalize();
  return x;
}

// Grids of base-field valuations, pushed through the source formulas.
std::vector<RamSources> source_grid(FiberCase shape, OmegaStatus omega) {
  std::vector<RamSources> out;
  RamSources s;
  s.regime = regime_of(shape);
  s.omega = omega;
  switch (s.regime) {
    case Regime::Smooth:
      if (omega == OmegaStatus::NonRamified) {
        for (int a = 0; a <= 5; ++a)
          for (int j = 0; j < 60; ++j) {
            s.r = frac(10 * a - j, 30);
            s.q = frac(5 * a - j, 10);
            out.push_back(s);
          }
      } else {
        for (int a = 0; a < 20; ++a)
          for (int j = 0; j < 80; ++j) {
            s.r = frac(j - 2 * a, 20);
            s.q = frac(5 * j - 6 * a, 40);
            out.push_back(s);
          }
      }
      break;
    case Regime::IrreducibleSingular:
      if (omega == OmegaStatus::NonRamified) {
        for (int a = 0; a <= 5; ++a)
          for (int j = 0; j < 72; ++j) {
            s.r = frac(12 * a - j, 36);
            s.q = frac(6 * a - j, 12);
            out.push_back(s);
          }
      } else if (omega == OmegaStatus::RamifiedRegularPreimage) {
        s.r_from_q = true;
        for (int a = 0; a < 24; ++a)
          for (int j = 0; j < 48; ++j) {
            s.q = frac(36 * a - 25 * j, 240);
            out.push_back(s);
          }
      } else {
        for (int b = 0; b < 12; ++b)
          for (int j = 0; j < 24; ++j) {
            s.r = frac(j - 6 * b, 12);
            s.q = frac(j - 9 * b, 12);
            out.push_back(s);
          }
      }
      break;
    case Regime::NotIrreducible: {
      const int den = shape == FiberCase::TwoSingularOneNode ? 4 : 12;
      for (int k = 1; k <= 2 * den; ++k) {
        s.dK = frac(k, den);
        s.j2_even = false;
        s.r.reset();
        // Odd nu(J2) is tabulated only for two smooth or two singular components.
        if (omega == OmegaStatus::NonRamified && shape != FiberCase::OneSmoothOneSingular) {
          for (int a = 0; a <= 1; ++a) {
            s.rK = (*s.dK + a) / 2;
            out.push_back(s);
          }
        }
        s.j2_even = true;
        s.rK.reset();
        switch (omega) {
          case OmegaStatus::NonRamified:
            for (int i = 0; i < 12; ++i) {
              s.r = frac(i, 6);
              out.push_back(s);
            }
            break;
          case OmegaStatus::RamifiedRegularPreimage:
            for (int i = 0; i < 16; ++i) {
              s.r = frac(i, 8);
              out.push_back(s);
            }
            break;
          case OmegaStatus::RamifiedSingularPreimage:
            for (int i = 0; i < 8; ++i) {
              s.r = frac(i, 4);
              out.push_back(s);
            }
            break;
          case OmegaStatus::OmegaSingular:
            for (int i = 0; i < 48; ++i) {
              s.rK = frac(i, 24);
              s.r = s.rK;
              out.push_back(s);
            }
            break;
        }
      }
      break;
    }
  }
  return out;
}

std::vector<OmegaStatus> statuses(Regime regime) {
  switch (regime) {
    case Regime::Smooth: return {OmegaStatus::NonRamified, OmegaStatus::RamifiedRegularPreimage};
    case Regime::IrreducibleSingular:
      return {OmegaStatus::NonRamified, OmegaStatus::RamifiedRegularPreimage, OmegaStatus::RamifiedSingularPreimage};
    case Regime::NotIrreducible:
      return {OmegaStatus::NonRamified, OmegaStatus::RamifiedRegularPreimage, OmegaStatus::RamifiedSingularPreimage,
              OmegaStatus::OmegaSingular};
  }
  return {};
}

// Degrees at level n that are free (not read off d).
std::vector<std::vector<std::int64_t>> free_degrees(FiberCase shape) {
  std::vector<std::vector<std::int64_t>> out;
  switch (shape) {
    case FiberCase::IrreducibleOneNode:
    case FiberCase::OneSmoothOneSingular:
      for (std::int64_t e = 1; e <= 12; ++e) out.push_back({e});
      break;
    case FiberCase::IrreducibleTwoNodes:
    case FiberCase::TwoSingularOneNode:
      for (std::int64_t a = 1; a <= 8; ++a)
        for (std::int64_t b = a; b <= 8; ++b) out.push_back({a, b});
      break;
    case FiberCase::TwoRationalThreeNodes:
      for (std::int64_t a = 1; a <= 8; ++a)
        for (std::int64_t b = a; b <= 8; ++b)
          for (std::int64_t c = b; c <= 8; ++c) out.push_back({a, b, c});
      break;
    default: out.push_back({}); break;
  }
  return out;
}

SingularityDegrees layout(FiberCase shape, const RamData& ram, const std::vector<std::int64_t>& free) {
  SingularityDegrees d{shape, free};
  if (regime_of(shape) == Regime::NotIrreducible) d.e.insert(d.e.begin(), ram.d.value_or(0));
  return d;
}

std::string describe(const TableQuery& q) {
  std::ostringstream os;
  os << to_string(q.shape) << " n=" << q.ram.n << " r=" << q.ram.r;
  if (q.ram.q) os << " q=" << *q.ram.q;
  if (q.ram.d) os << " d=" << *q.ram.d;
  if (q.ram.j2_even) os << (*q.ram.j2_even ? " j2=even" : " j2=odd");
  os << " omega=" << to_string(q.omega) << " e=";
  for (std::size_t i = 0; i < q.degrees.e.size(); ++i) os << (i ? "," : "") << q.degrees.e[i];
  if (q.remark_q) os << " q_remark=" << *q.remark_q;
  if (q.e1_smooth) os << (*q.e1_smooth ? " E1=smooth" : " E1=singular");
  return os.str();
}

struct Auditor {
  explicit Auditor(AuditReport& r) : rep(r) {}

  AuditReport& rep;
  std::vector<bool> hit = std::vector<bool>(table_rows().size(), false);
  std::set<std::string> violations, overlaps, doubles;

  void examine(TableQuery q, TableQuery qt) {
    const auto& rows = table_rows();
    for (std::optional<bool> flag : {std::optional<bool>{}, std::optional<bool>{true}, std::optional<bool>{false}}) {
      q.e1_smooth = qt.e1_smooth = flag;
      std::vector<std::size_t> matches;
      bool needs_flag = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
          if (row_matches(rows[i], q)) matches.push_back(i);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::MissingFlag) throw;
          needs_flag = true;
        }
      }
      if (!flag && needs_flag) continue;  // retried with both flag values
      ++rep.tuples;
      if (matches.size() > 1) {
        std::ostringstream os;
        os << "rows " << matches[0] << " (" << rows[matches[0]].x.text() << ") and " << matches[1] << " ("
           << rows[matches[1]].x.text() << ") both match " << describe(q);
        overlaps.insert(os.str());
        continue;
      }
      if (matches.empty()) {
        ++rep.unmatched;
      } else {
        check(q, qt);
      }
      if (!needs_flag) return;
    }
  }

  void check(const TableQuery& q, const TableQuery& qt) {
    TableLookup a;
    try {
      a = lookup(q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParameterConstraint) throw;
      ++rep.constraint_failures;
      return;
    }
    ++rep.matched;
    hit[a.row] = true;
    const TableRow& row = table_rows()[a.row];
    try {
      TableLookup b = lookup(qt);
      ++rep.checked;
      if (!(a.xchi == b.x) || !(b.xchi == a.x)) {
        std::ostringstream os;
        os << row.table << " row " << a.row << " [" << row.predicate << "]: " << a.x.format() << " -> "
           << a.xchi.format() << " but the twisted data give " << b.x.format() << " -> " << b.xchi.format()
           << " (" << describe(q) << ")";
        violations.insert(os.str());
      }
    } catch (const Error& e) {
      std::ostringstream os;
      os << row.table << " row " << a.row << " [" << row.predicate << "]: twisted data " << describe(qt) << ": "
         << e.what();
      violations.insert(os.str());
    }
  }

  void run() {
    for (FiberCase shape : kAllFiberCases) {
      for (OmegaStatus omega : statuses(regime_of(shape))) {
        for (const RamSources& s : source_grid(shape, omega)) {
          const RamSources st = twist_sources(s);
          RamData ram, ramt;
          try {
            ram = ram_data(s);
            ramt = ram_data(st);
          } catch (const Error&) {
            ++rep.skipped;
            continue;
          }
          const RamData back = ram_data(twist_sources(st));
          if (back.n != ram.n || back.r != ram.r || back.q != ram.q || back.d != ram.d) {
            std::ostringstream os;
            os << to_string(shape) << " " << to_string(omega) << ": n=" << ram.n << " r=" << ram.r << " returns as n="
               << back.n << " r=" << back.r;
            doubles.insert(os.str());
          }
          for (const auto& free : free_degrees(shape)) {
            std::vector<std::int64_t> twisted;
            bool integral = true;
            for (std::int64_t e : free) {
              if ((e * ramt.n) % ram.n != 0) integral = false;
              twisted.push_back(e * ramt.n / ram.n);
            }
            if (!integral) {
              ++rep.skipped;
              continue;
            }
            TableQuery q, qt;
            q.shape = qt.shape = shape;
            q.omega = qt.omega = omega;
            q.ram = ram;
            qt.ram = ramt;
            q.degrees = layout(shape, ram, free);
            qt.degrees = layout(shape, ramt, twisted);
            if (shape == FiberCase::OneSmoothOneSingular) {
              for (std::int64_t rq = 0; rq <= 3; ++rq) {
                q.remark_q = qt.remark_q = rq;
                examine(q, qt);
              }
            } else {
              examine(q, qt);
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
      if (!hit[i]) rep.rows_never_hit.push_back(i);
    rep.violations.assign(violations.begin(), violations.end());
    rep.overlaps.assign(overlaps.begin(), overlaps.end());
    rep.double_twist_violations.assign(doubles.begin(), doubles.end());
  }
};

void audit_wild(AuditReport& rep) {
  const auto& table = char5_twist_table();
  auto image = [&](const ReductionSymbol& s) -> std::optional<ReductionSymbol> {
    for (const auto& [x, y] : table)
      if (x == s) return y;
    return std::nullopt;
  };
  for (const auto& [x, y] : table) {
    auto back = image(y);
    if (!back || !(*back == x))
      rep.wild_violations.push_back("char 5: " + x.format() + " -> " + y.format() + " does not return");
  }

  auto smooth = smooth_n5_n10_map();
  auto key = [](const std::pair<ReductionSymbol, ReductionSymbol>& p) { return p.first.format() + ">" + p.second.format(); };
  std::set<std::string> a, b;
  for (const auto& p : table) a.insert(key(p));
  for (const auto& p : smooth) b.insert(key(p));
  if (a != b) rep.wild_violations.push_back("char 5 table differs from the smooth n = 5, 10 rows");

  // The coefficient substitutions of the twist reproduce the table.
  for (int v6 : {1, 2, 3, 4, 6, 7, 8, 9}) {
    Rational b6 = 1;
    for (int i = 0; i < v6; ++i) b6 *= 5;
    for (const Rational& b0 : {Rational(5), Rational(0)}) {
      std::array<Rational, 7> b{b0, Rational(1), Rational(5), Rational(10), Rational(0), Rational(25), b6};
      const ReductionSymbol x = wild_char5_type(b);
      const ReductionSymbol y = wild_char5_type(b, Rational(5));
      auto expected = image(x);
      if (!expected || !(*expected == y))
        rep.wild_violations.push_back("char 5: nu(b6) = " + std::to_string(v6) + " twists to " + y.format());
    }
  }

  for (std::int64_t n = -3; n <= 12; ++n) {
    ReductionSymbol s{"III", {n}};
    if (!(char3_twist(char3_twist(s)) == s)) rep.wild_violations.push_back("char 3: " + s.format() + " does not return");
  }
  for (int v3 : {1, 2})
    for (int va : {0, 1, 2}) {
      Rational a0 = 1;
      for (int i = 0; i < va; ++i) a0 *= 3;
      Rational c3 = v3 == 1 ? Rational(3) : Rational(9);
      std::array<Rational, 6> c{Rational(1), Rational(2), c3, Rational(3), Rational(0), Rational(27)};
      const ReductionSymbol x = wild_char3_type(a0, c);
      const ReductionSymbol y = wild_char3_type(a0, c, Rational(3));
      if (!(char3_twist(x) == y))
        rep.wild_violations.push_back("char 3: " + x.format() + " twists to " + y.format());
    }
}

}  // namespace

std::vector<std::pair<ReductionSymbol, ReductionSymbol>> smooth_n5_n10_map() {
  std::vector<std::pair<ReductionSymbol, ReductionSymbol>> out;
  const Bindings none;
  for (const TableRow& row : table_rows())
    if (row.shape == FiberCase::Smooth && (row.n == 5 || row.n == 10))
      out.emplace_back(row.x.instantiate(none), row.xchi.instantiate(none));
  return out;
}

AuditReport table_involution_audit() {
  AuditReport rep;
  Auditor(rep).run();
  audit_wild(rep);
  return rep;
}

}  // namespace g2t
