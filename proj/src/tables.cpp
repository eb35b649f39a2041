#include "g2twist/tables.hpp"

#include <algorithm>
#include <sstream>

#include "g2twist/error.hpp"

namespace g2t {

namespace {

struct RowSpec {
  const char* table;
  const char* predicate;
  const char* x;
  const char* xchi;
};

// One entry per printed table row. Rows printed with two residue pairs on one line
// appear as two entries. Predicates: n=, r=, q=, d= (residues mod n unless written r%k=),
// j2=even|odd, pre=regular|singular, remark=I0first|Iqfirst, eq=d1d2|all|pair.
const RowSpec kRows[] = {
    {"smooth", "n=1", "I[0,0,0]", "Istar[0,0,0]"},
    {"smooth", "n=2 r=0", "Istar[0,0,0]", "I[0,0,0]"},
    {"smooth", "n=2 r=1", "II", "II"},
    {"smooth", "n=3", "III", "IV"},
    {"smooth", "n=4", "VI", "VI"},
    {"smooth", "n=5 r=1", "IX[3]", "VIII[1]"},
    {"smooth", "n=5 r=2", "IX[1]", "VIII[3]"},
    {"smooth", "n=5 r=3", "IX[4]", "VIII[2]"},
    {"smooth", "n=5 r=4", "IX[2]", "VIII[4]"},
    {"smooth", "n=6 r=1 q=0", "V", "Vstar"},
    {"smooth", "n=6 r=5 q=3", "V", "Vstar"},
    {"smooth", "n=6 r=1 q=3", "Vstar", "V"},
    {"smooth", "n=6 r=5 q=0", "Vstar", "V"},
    {"smooth", "n=6 r=2,4", "IV", "III"},
    {"smooth", "n=8 q=1,3", "VIIstar", "VII"},
    {"smooth", "n=8 q=5,7", "VII", "VIIstar"},
    {"smooth", "n=10 r=2", "VIII[1]", "IX[3]"},
    {"smooth", "n=10 r=4", "VIII[3]", "IX[1]"},
    {"smooth", "n=10 r=6", "VIII[2]", "IX[4]"},
    {"smooth", "n=10 r=8", "VIII[4]", "IX[2]"},

    {"one-node", "n=1", "I[d,0,0]", "Istar[d,0,0]"},
    {"one-node", "n=2 r=0", "Istar[d/2,0,0]", "I[d/2,0,0]"},
    {"one-node", "n=2 r=1 q=0", "IIstar[d/2,0]", "II[d/2,0]"},
    {"one-node", "n=2 r=1 q=1", "II[d/2,0]", "IIstar[d/2,0]"},
    {"one-node", "n=3 r=1", "IV-II[(d-2)/3]", "IIstar-IIstar[(d-2)/3]"},
    {"one-node", "n=3 r=2", "IVstar-II[(d-1)/3]", "II-IIstar[(d-1)/3]"},
    {"one-node", "n=4 r=1 q=1", "III-II[(d-2)/4]", "IIIstar-IIstar[(d-2)/4]"},
    {"one-node", "n=4 r=1 q=3", "IIIstar-IIstar[(d-2)/4]", "III-II[(d-2)/4]"},
    {"one-node", "n=4 r=3 q=1", "III-IIstar[(d-2)/4]", "IIIstar-II[(d-2)/4]"},
    {"one-node", "n=4 r=3 q=3", "IIIstar-II[(d-2)/4]", "III-IIstar[(d-2)/4]"},
    {"one-node", "n=6 r=2", "IIstar-IIstar[(d-4)/6]", "IV-II[(d-4)/6]"},
    {"one-node", "n=6 r=4", "II-IIstar[(d-2)/6]", "IVstar-II[(d-2)/6]"},

    {"two-nodes", "n=1", "I[d1,d2,0]", "Istar[d1,d2,0]"},
    {"two-nodes", "n=2 r=0", "Istar[d1/2,d2/2,0]", "I[d1/2,d2/2,0]"},
    {"two-nodes", "n=2 r=1 pre=regular eq=d1d2", "2I[d1,0]", "2I[d1,0]"},
    {"two-nodes", "n=2 r=1 pre=singular", "II[d1/2,d2/2]", "II[d1/2,d2/2]"},
    {"two-nodes", "n=4 eq=d1d2", "III[d1/2]", "III[d1/2]"},

    {"c000", "n=1", "I[d1,d2,d3]", "Istar[d1,d2,d3]"},
    {"c000", "n=2 r=0", "Istar[d1/2,d2/2,d3/2]", "I[d1/2,d2/2,d3/2]"},
    {"c000", "n=2 r=1 q=0 eq=pair", "IIstar[e1/2,e2]", "II[e1/2,e2]"},
    {"c000", "n=2 r=1 q=1 eq=pair", "II[e1/2,e2]", "IIstar[e1/2,e2]"},
    {"c000", "n=3 eq=all", "III[d1]", "IIIstar[d1]"},
    {"c000", "n=6 r=0,2,4 eq=all", "IIIstar[d1/2]", "III[d1/2]"},

    {"two-elliptic-even", "n=1", "I0-I0[d]", "I0star-I0star[d-1]"},
    {"two-elliptic-even", "n=2 d=0", "I0star-I0star[(d-2)/2]", "I0-I0[d/2]"},
    {"two-elliptic-even", "n=2 d=1", "I0-I0star[(d-1)/2]", "I0-I0star[(d-1)/2]"},
    {"two-elliptic-even", "n=3 d=0", "IV-IVstar[(d-3)/3]", "II-IIstar[(d-3)/3]"},
    {"two-elliptic-even", "n=3 d=1 r=0,1", "I0-IV[(d-1)/3]", "I0star-IIstar[(d-4)/3]"},
    {"two-elliptic-even", "n=3 d=1 r=2", "IVstar-IVstar[(d-4)/3]", "II-II[(d-1)/3]"},
    {"two-elliptic-even", "n=3 d=2 r=0,2", "I0-IVstar[(d-2)/3]", "I0star-II[(d-2)/3]"},
    {"two-elliptic-even", "n=3 d=2 r=1", "IV-IV[(d-2)/3]", "IIstar-IIstar[(d-5)/3]"},
    {"two-elliptic-even", "n=4 d=0", "III-IIIstar[(d-4)/4]", "III-IIIstar[(d-4)/4]"},
    {"two-elliptic-even", "n=4 d=1 r=0,1", "I0-III[(d-1)/4]", "I0star-IIIstar[(d-5)/4]"},
    {"two-elliptic-even", "n=4 d=1 r=2,3", "I0star-IIIstar[(d-5)/4]", "I0-III[(d-1)/4]"},
    {"two-elliptic-even", "n=4 d=2 r=1", "III-III[(d-2)/4]", "IIIstar-IIIstar[(d-6)/4]"},
    {"two-elliptic-even", "n=4 d=2 r=3", "IIIstar-IIIstar[(d-6)/4]", "III-III[(d-2)/4]"},
    {"two-elliptic-even", "n=4 d=3 r=0,3", "I0-IIIstar[(d-3)/4]", "I0star-III[(d-3)/4]"},
    {"two-elliptic-even", "n=4 d=3 r=1,2", "I0star-III[(d-3)/4]", "I0-IIIstar[(d-3)/4]"},
    {"two-elliptic-even", "n=6 d=0", "II-IIstar[(d-6)/6]", "IV-IVstar[(d-6)/6]"},
    {"two-elliptic-even", "n=6 d=1 r=0,1", "I0-II[(d-1)/6]", "I0star-IVstar[(d-7)/6]"},
    {"two-elliptic-even", "n=6 d=1 r=2,5", "IIstar-IV[(d-7)/6]", "IIstar-IV[(d-7)/6]"},
    {"two-elliptic-even", "n=6 d=1 r=3,4", "I0star-IVstar[(d-7)/6]", "I0-II[(d-1)/6]"},
    {"two-elliptic-even", "n=6 d=2 r=1", "II-II[(d-2)/6]", "IVstar-IVstar[(d-8)/6]"},
    {"two-elliptic-even", "n=6 d=2 r=3,5", "I0star-IIstar[(d-8)/6]", "I0-IV[(d-2)/6]"},
    {"two-elliptic-even", "n=6 d=3 r=1,2", "II-IV[(d-3)/6]", "IIstar-IVstar[(d-9)/6]"},
    {"two-elliptic-even", "n=6 d=3 r=4,5", "IIstar-IVstar[(d-9)/6]", "II-IV[(d-3)/6]"},
    {"two-elliptic-even", "n=6 d=4 r=1,3", "I0star-II[(d-4)/6]", "I0-IVstar[(d-4)/6]"},
    {"two-elliptic-even", "n=6 d=4 r=5", "IIstar-IIstar[(d-10)/6]", "IV-IV[(d-4)/6]"},
    {"two-elliptic-even", "n=6 d=5 r=0,5", "I0-IIstar[(d-5)/6]", "I0star-IV[(d-5)/6]"},
    {"two-elliptic-even", "n=6 d=5 r=1,4", "II-IVstar[(d-5)/6]", "II-IVstar[(d-5)/6]"},
    {"two-elliptic-even", "n=6 d=5 r=2,3", "I0star-IV[(d-5)/6]", "I0-IIstar[(d-5)/6]"},
    {"two-elliptic-even", "n=12 d=1 r=3,10", "IIstar-III[(d-13)/12]", "IV-IIIstar[(d-13)/12]"},
    {"two-elliptic-even", "n=12 d=1 r=4,9", "IV-IIIstar[(d-13)/12]", "IIstar-III[(d-13)/12]"},
    {"two-elliptic-even", "n=12 d=5 r=2,3", "II-III[(d-5)/12]", "IVstar-IIIstar[(d-17)/12]"},
    {"two-elliptic-even", "n=12 d=5 r=8,9", "IVstar-IIIstar[(d-17)/12]", "II-III[(d-5)/12]"},
    {"two-elliptic-even", "n=12 d=7 r=3,4", "IV-III[(d-7)/12]", "IIstar-IIIstar[(d-19)/12]"},
    {"two-elliptic-even", "n=12 d=7 r=9,10", "IIstar-IIIstar[(d-19)/12]", "IV-III[(d-7)/12]"},
    {"two-elliptic-even", "n=12 d=11 r=3,8", "IVstar-III[(d-11)/12]", "II-IIIstar[(d-11)/12]"},
    {"two-elliptic-even", "n=12 d=11 r=2,9", "II-IIIstar[(d-11)/12]", "IVstar-III[(d-11)/12]"},

    {"two-elliptic-odd", "n=2", "2I0[r]", "2I0[r]"},
    {"two-elliptic-odd", "n=4", "2I0star[(r-1)/2]", "2I0star[(r-1)/2]"},
    {"two-elliptic-odd", "n=6 r%3=1", "2IV[(r-1)/3]", "2IV[(r-1)/3]"},
    {"two-elliptic-odd", "n=6 r%3=2", "2IVstar[(r-2)/3]", "2IVstar[(r-2)/3]"},
    {"two-elliptic-odd", "n=8 r%4=1", "2III[(r-1)/4]", "2III[(r-1)/4]"},
    {"two-elliptic-odd", "n=8 r%4=3", "2IIIstar[(r-3)/4]", "2IIIstar[(r-3)/4]"},
    {"two-elliptic-odd", "n=12 r%6=1", "2II[(r-1)/6]", "2II[(r-1)/6]"},
    {"two-elliptic-odd", "n=12 r%6=5", "2IIstar[(r-5)/6]", "2IIstar[(r-5)/6]"},

    {"elliptic-rational", "n=1", "I-I0[d1,d]", "I0star-Istar[d1,d-1]"},
    {"elliptic-rational", "n=2 d=0", "I0star-Istar[d1/2,(d-2)/2]", "I-I0[d1/2,d/2]"},
    {"elliptic-rational", "n=2 d=1 remark=I0first", "I0-Istar[q,(d-1)/2]", "I-I0star[q,(d-1)/2]"},
    {"elliptic-rational", "n=2 d=1 remark=Iqfirst", "I-I0star[q,(d-1)/2]", "I0-Istar[q,(d-1)/2]"},
    {"elliptic-rational", "n=3 d=1", "IV-I[d1/3,(d-1)/3]", "IIstar-Istar[d1/3,(d-4)/3]"},
    {"elliptic-rational", "n=3 d=2", "IVstar-I[d1/3,(d-2)/3]", "II-Istar[d1/3,(d-2)/3]"},
    {"elliptic-rational", "n=4 d=1 r=0,1", "III-I[d1/4,(d-1)/4]", "IIIstar-Istar[d1/4,(d-5)/4]"},
    {"elliptic-rational", "n=4 d=1 r=2,3", "IIIstar-Istar[d1/4,(d-5)/4]", "III-I[d1/4,(d-1)/4]"},
    {"elliptic-rational", "n=4 d=3 r=0,3", "IIIstar-I[d1/4,(d-3)/4]", "III-Istar[d1/4,(d-3)/4]"},
    {"elliptic-rational", "n=4 d=3 r=1,2", "III-Istar[d1/4,(d-3)/4]", "IIIstar-I[d1/4,(d-3)/4]"},
    {"elliptic-rational", "n=6 d=1 r=0,1", "II-I[d1/6,(d-1)/6]", "IVstar-Istar[d1/6,(d-7)/6]"},
    {"elliptic-rational", "n=6 d=1 r=3,4", "IVstar-Istar[d1/6,(d-7)/6]", "II-I[d1/6,(d-1)/6]"},
    {"elliptic-rational", "n=6 d=2", "IIstar-Istar[d1/6,(d-8)/6]", "IV-I[d1/6,(d-2)/6]"},
    {"elliptic-rational", "n=6 d=4", "II-Istar[d1/6,(d-4)/6]", "IVstar-I[d1/6,(d-4)/6]"},
    {"elliptic-rational", "n=6 d=5 r=0,5", "IIstar-I[d1/6,(d-5)/6]", "IV-Istar[d1/6,(d-5)/6]"},
    {"elliptic-rational", "n=6 d=5 r=2,3", "IV-Istar[d1/6,(d-5)/6]", "IIstar-I[d1/6,(d-5)/6]"},

    {"two-rational", "n=1", "I-I[d1,d2,d]", "Istar-Istar[d1,d2,d-1]"},
    {"two-rational", "n=2 j2=even d=0", "Istar-Istar[d1/2,d2/2,(d-2)/2]", "I-I[d1/2,d2/2,d/2]"},
    {"two-rational", "n=2 j2=even d=1", "I-Istar[e1/2,e2/2,(d-1)/2]", "I-Istar[e1/2,e2/2,(d-1)/2]"},
    {"two-rational", "n=2 j2=odd eq=d1d2", "2I[d1,d/2]", "2I[d1,d/2]"},
    {"two-rational", "n=4 j2=odd eq=d1d2", "2Istar[d1/2,(d-2)/4]", "2Istar[d1/2,(d-2)/4]"},
};

FiberCase shape_of_table(std::string_view table) {
  if (table == "smooth") return FiberCase::Smooth;
  if (table == "one-node") return FiberCase::IrreducibleOneNode;
  if (table == "two-nodes") return FiberCase::IrreducibleTwoNodes;
  if (table == "c000") return FiberCase::TwoRationalThreeNodes;
  if (table == "two-elliptic-even" || table == "two-elliptic-odd") return FiberCase::TwoSmoothOneNode;
  if (table == "elliptic-rational") return FiberCase::OneSmoothOneSingular;
  if (table == "two-rational") return FiberCase::TwoSingularOneNode;
  throw Error(ErrorKind::InvalidInput, "tables", "unknown table " + std::string(table));
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

TableRow build(const RowSpec& spec) {
  TableRow row;
  row.table = spec.table;
  row.shape = shape_of_table(spec.table);
  row.predicate = spec.predicate;
  row.x = SymbolTemplate(spec.x);
  row.xchi = SymbolTemplate(spec.xchi);
  if (row.table == "two-elliptic-even") row.j2_even = true;
  if (row.table == "two-elliptic-odd") row.j2_even = false;
  // A singular and a smooth component are each Galois-stable, which forces 2 | nu(J2).
  if (row.table == "elliptic-rational") row.j2_even = true;

  std::stringstream ss(spec.predicate);
  std::string clause;
  while (ss >> clause) {
    auto eq = clause.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "tables", "bad clause " + clause);
    std::string key = clause.substr(0, eq);
    std::string value = clause.substr(eq + 1);
    if (key == "n") {
      row.n = std::stoll(value);
    } else if (key == "r" || key == "q" || key == "d") {
      ResidueSet& set = key == "r" ? row.r : key == "q" ? row.q : row.d;
      set.values = parse_list(value);
    } else if (key.rfind("r%", 0) == 0) {
      row.r.modulus = std::stoll(key.substr(2));
      row.r.values = parse_list(value);
    } else if (key == "j2") {
      row.j2_even = value == "even";
    } else if (key == "pre") {
      row.preimage = value == "regular" ? Preimage::Regular : Preimage::Singular;
    } else if (key == "remark") {
      row.remark = value == "I0first" ? RemarkBranch::I0First : RemarkBranch::IqFirst;
    } else if (key == "eq") {
      row.constraint = value == "d1d2"  ? DegreeConstraint::D1EqualsD2
                       : value == "all" ? DegreeConstraint::AllEqual
                                        : DegreeConstraint::PairEqual;
    } else {
      throw Error(ErrorKind::InvalidInput, "tables", "unknown predicate key " + key);
    }
  }
  return row;
}

bool in_set(const ResidueSet& set, std::int64_t n, std::int64_t value) {
  if (set.values.empty()) return true;
  const std::int64_t m = set.modulus ? set.modulus : n;
  const std::int64_t v = mod_floor(value, m);
  return std::find(set.values.begin(), set.values.end(), v) != set.values.end();
}

std::int64_t degree(const TableQuery& q, std::size_t i, const char* what) {
  if (q.degrees.e.size() <= i)
    throw Error(ErrorKind::InvalidInput, "tables", std::string("missing degree ") + what);
  return q.degrees.e[i];
}

void check_constraint(const TableRow& row, const Bindings& vars) {
  auto get = [&](const char* k) { return vars.at(k); };
  bool ok = true;
  switch (row.constraint) {
    case DegreeConstraint::None: return;
    case DegreeConstraint::D1EqualsD2: ok = get("d1") == get("d2"); break;
    case DegreeConstraint::AllEqual: ok = get("d1") == get("d2") && get("d2") == get("d3"); break;
    case DegreeConstraint::PairEqual: ok = vars.count("e1") > 0; break;
  }
  if (!ok)
    throw Error(ErrorKind::ParameterConstraint, "tables",
                "row '" + row.x.text() + "' requires equal degrees of singularity");
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> out;
    for (const auto& spec : kRows) out.push_back(build(spec));
    return out;
  }();
  return rows;
}

Bindings bindings_of(const TableQuery& q) {
  Bindings b;
  b["n"] = q.ram.n;
  b["r"] = q.ram.r;
  if (q.ram.q) b["q"] = *q.ram.q;
  if (q.ram.d) b["d"] = *q.ram.d;
  switch (q.shape) {
    case FiberCase::Smooth: break;
    case FiberCase::IrreducibleOneNode: b["d"] = degree(q, 0, "e"); break;
    case FiberCase::IrreducibleTwoNodes:
      b["d1"] = degree(q, 0, "e1");
      b["d2"] = degree(q, 1, "e2");
      break;
    case FiberCase::TwoRationalThreeNodes: {
      std::int64_t e[3] = {degree(q, 0, "e1"), degree(q, 1, "e2"), degree(q, 2, "e3")};
      std::sort(e, e + 3);
      b["d1"] = e[0];
      b["d2"] = e[1];
      b["d3"] = e[2];
      // Two nodes of equal degree e1 and a third of degree e2.
      if (e[0] == e[1]) {
        b["e1"] = e[0];
        b["e2"] = e[2];
      } else if (e[1] == e[2]) {
        b["e1"] = e[1];
        b["e2"] = e[0];
      }
      break;
    }
    case FiberCase::TwoSmoothOneNode:
      if (q.ram.j2_even && !*q.ram.j2_even) b["r"] = to_int64(Rational(q.ram.r_raw));
      break;
    case FiberCase::OneSmoothOneSingular:
      b["d1"] = degree(q, 1, "e1");
      if (q.remark_q) b["q"] = *q.remark_q;
      break;
    case FiberCase::TwoSingularOneNode:
      b["d1"] = b["e1"] = degree(q, 1, "e1");
      b["d2"] = b["e2"] = degree(q, 2, "e2");
      break;
  }
  return b;
}

bool row_matches(const TableRow& row, const TableQuery& q) {
  if (row.shape != q.shape || row.n != q.ram.n) return false;
  if (row.j2_even && q.ram.j2_even && *row.j2_even != *q.ram.j2_even) return false;
  if (row.j2_even && !q.ram.j2_even) return false;
  if (!in_set(row.r, q.ram.n, q.ram.r)) return false;
  if (!row.q.values.empty() && (!q.ram.q || !in_set(row.q, q.ram.n, *q.ram.q))) return false;
  if (!row.d.values.empty() && (!q.ram.d || !in_set(row.d, q.ram.n, *q.ram.d))) return false;
  switch (row.preimage) {
    case Preimage::Any: break;
    case Preimage::Regular:
      if (q.omega == OmegaStatus::RamifiedSingularPreimage) return false;
      break;
    case Preimage::Singular:
      if (q.omega != OmegaStatus::RamifiedSingularPreimage) return false;
      break;
  }
  if (row.remark != RemarkBranch::None) {
    if (!q.e1_smooth)
      throw Error(ErrorKind::MissingFlag, "tables",
                  "this row depends on whether the component containing omega is smooth (--e1-smooth)");
    const bool r_even = q.ram.r % 2 == 0;
    const bool i0_first = (*q.e1_smooth && r_even) || (!*q.e1_smooth && !r_even);
    if (i0_first != (row.remark == RemarkBranch::I0First)) return false;
  }
  return true;
}

TableLookup lookup(const TableQuery& q) {
  const auto& rows = table_rows();
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_matches(rows[i], q)) continue;
    if (found)
      throw Error(ErrorKind::NoMatchingRow, "tables",
                  "rows '" + rows[*found].x.text() + "' and '" + rows[i].x.text() + "' both match");
    found = i;
  }
  if (!found) {
    std::ostringstream os;
    os << "no row for " << to_string(q.shape) << " with n=" << q.ram.n << " r=" << q.ram.r;
    if (q.ram.q) os << " q=" << *q.ram.q;
    if (q.ram.d) os << " d=" << *q.ram.d;
    throw Error(ErrorKind::NoMatchingRow, "tables", os.str());
  }
  const TableRow& row = rows[*found];
  const Bindings vars = bindings_of(q);
  check_constraint(row, vars);
  return TableLookup{*found, row.x.instantiate(vars), row.xchi.instantiate(vars)};
}

namespace {

std::int64_t nu(const Rational& x, const LocalContext& ctx, const char* what) {
  Val v = ctx.val(x);
  if (v.is_infinite())
    throw Error(ErrorKind::NormalFormRequired, "wild", std::string(what) + " must be nonzero");
  return v.value();
}

}  // namespace

ReductionSymbol wild_char3_type(const Rational& a0, const std::array<Rational, 6>& c, const std::optional<Rational>& d) {
  const LocalContext ctx(3);
  const std::int64_t v3 = nu(c[2], ctx, "c3");
  if (v3 != 1 && v3 != 2) throw Error(ErrorKind::NormalFormRequired, "wild", "normal form needs nu(c3) = 1 or 2");
  std::optional<std::int64_t> n;
  for (int i = 4; i <= 6; ++i) {
    Val vi = ctx.val(c[i - 1]);
    if (vi.is_infinite()) continue;
    std::int64_t term = 3 * vi.value() - i * v3;
    if (!n || term < *n) n = term;
  }
  if (!n) throw Error(ErrorKind::NormalFormRequired, "wild", "c4, c5, c6 all vanish");
  Rational lead = d ? Rational(a0 * *d) : a0;
  const bool even = nu(lead, ctx, "a0") % 2 == 0;
  return ReductionSymbol{even ? "III" : "IIIstar", {*n}};
}

namespace {

ReductionSymbol char5_type_from_b6(const Rational& b6) {
  const LocalContext ctx(5);
  const std::int64_t v6 = nu(b6, ctx, "b6");
  if (v6 < 1 || v6 > 9 || v6 == 5)
    throw Error(ErrorKind::NormalFormRequired, "wild", "normal form needs 1 <= nu(b6) <= 9, nu(b6) != 5");
  if (v6 % 2 == 0) return ReductionSymbol{"IX", {v6 / 2}};
  const std::int64_t m = (v6 + 1) / 2;
  return ReductionSymbol{"VIII", {m <= 2 ? m : m - 1}};
}

}  // namespace

ReductionSymbol wild_char5_type(const std::array<Rational, 7>& b) {
  const LocalContext ctx(5);
  if (!ctx.in_m(b[0]) || !ctx.is_unit(b[1]))
    throw Error(ErrorKind::NormalFormRequired, "wild", "normal form needs nu(b0) >= 1 and nu(b1) = 0");
  for (int i = 2; i <= 6; ++i)
    if (!ctx.in_R(b[i])) throw Error(ErrorKind::NormalFormRequired, "wild", "normal form needs integral coefficients");
  return char5_type_from_b6(b[6]);
}

std::array<Rational, 7> char5_twisted_form(const std::array<Rational, 7>& b, const Rational& d) {
  const LocalContext ctx(5);
  if (ctx.val(d) != Val(1)) throw Error(ErrorKind::InvalidInput, "wild", "the twist pipeline expects nu(D) = 1");
  const Rational t = 5;
  // b_i' = D t^(i-2) b_i
  std::array<Rational, 7> out;
  for (int i = 0; i < 7; ++i) {
    Rational s = d * b[i];
    for (int k = 0; k < i - 2; ++k) s *= t;
    for (int k = 0; k < 2 - i; ++k) s /= t;
    out[i] = s;
  }
  if (ctx.is_unit(out[0])) {
    // u -> u / (1 - c u), z -> z / (1 - c u)^3 with c = b0'/b1':
    // new polynomial = sum b_i u^(6-i) (1 - c u)^i.
    const Rational c = out[0] / out[1];
    std::array<Rational, 7> next{};
    for (int i = 0; i < 7; ++i) {
      // (1 - c u)^i = sum_k C(i,k) (-c)^k u^k contributes to degree 6 - i + k, index i - k.
      Rational binom = 1;
      Rational power = 1;
      for (int k = 0; k <= i; ++k) {
        next[i - k] += out[i] * binom * power;
        binom = binom * (i - k) / (k + 1);
        power *= -c;
      }
    }
    out = next;
  }
  if (ctx.val(out[6]) > Val(9)) {
    // u -> t^2 u, z -> t^5 z: b_i'' = b_i' t^(2 - 2i)
    for (int i = 0; i < 7; ++i) {
      for (int k = 0; k < 2 - 2 * i; ++k) out[i] *= t;
      for (int k = 0; k < 2 * i - 2; ++k) out[i] /= t;
    }
  }
  return out;
}

ReductionSymbol wild_char5_type(const std::array<Rational, 7>& b, const std::optional<Rational>& d) {
  if (!d) return wild_char5_type(b);
  wild_char5_type(b);
  // After the renormalizations only nu(b6) is tracked, as in the proof of the twist corollary.
  return char5_type_from_b6(char5_twisted_form(b, *d)[6]);
}

const std::vector<std::pair<ReductionSymbol, ReductionSymbol>>& char5_twist_table() {
  static const std::vector<std::pair<ReductionSymbol, ReductionSymbol>> table = [] {
    const char* rows[][2] = {{"IX[1]", "VIII[3]"}, {"IX[2]", "VIII[4]"}, {"IX[3]", "VIII[1]"}, {"IX[4]", "VIII[2]"},
                             {"VIII[1]", "IX[3]"}, {"VIII[2]", "IX[4]"}, {"VIII[3]", "IX[1]"}, {"VIII[4]", "IX[2]"}};
    std::vector<std::pair<ReductionSymbol, ReductionSymbol>> out;
    for (auto& r : rows) out.emplace_back(ReductionSymbol::parse(r[0]), ReductionSymbol::parse(r[1]));
    return out;
  }();
  return table;
}

ReductionSymbol char3_twist(const ReductionSymbol& s) {
  if (s.params.size() == 1 && s.family == "III") return ReductionSymbol{"IIIstar", s.params};
  if (s.params.size() == 1 && s.family == "IIIstar") return ReductionSymbol{"III", s.params};
  throw Error(ErrorKind::InvalidInput, "wild", "not a char-3 wild type: " + s.format());
}

}  // namespace g2t
