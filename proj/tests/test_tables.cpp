#include "doctest.h"
#include "g2twist/error.hpp"
#include "g2twist/tables.hpp"
#include "golden.hpp"

using namespace g2t;

using namespace g2t::golden;

namespace {

std::vector<GoldenRow> read_golden() { return g2t::golden::read_golden(G2T_TEST_DATA "/tables.golden"); }

}  // namespace

TEST_CASE("LaTeX converter") {
  CHECK(latex_to_template("$[{\\rm I}_{0-0-0}]$") == "I[0,0,0]");
  CHECK(latex_to_template("$[{\\rm I}^*_0-{\\rm II}-(d-4)/6]$") == "I0star-II[(d-4)/6]");
  CHECK(latex_to_template("$[{\\rm I}_{0}^*-{\\rm I}_{d_1}^*-(d-1)]$") == "I0star-Istar[d1,d-1]");
  CHECK(latex_to_template("$[2{\\rm I}_{d_1}-0]$") == "2I[d1,0]");
  CHECK(latex_to_template("$[\\rm{V}^*]$") == "Vstar");
  CHECK(latex_to_template("$[\\rm{IX}-3]$") == "IX[3]");
}

TEST_CASE("every printed row is encoded and nothing else") {
  const auto golden = read_golden();
  std::size_t checked = 0;
  for (const auto& problem : fidelity_problems(golden, &checked)) FAIL_CHECK(problem);
  CHECK(checked == table_rows().size() + 8 + 2);
}

TEST_CASE("narrowed rows") {
  for (const TableRow& row : table_rows())
    if (narrowed(row)) CHECK(values(row.r) == std::set<std::int64_t>{0, 2, 4});
}

TEST_CASE("wild twist tables as printed") {
  const auto golden = read_golden();
  std::vector<std::pair<ReductionSymbol, ReductionSymbol>> char5;
  int char3 = 0;
  for (const GoldenRow& g : golden) {
    if (g.table == "char5")
      char5.emplace_back(ReductionSymbol::parse(latex_to_template(g.x)), ReductionSymbol::parse(latex_to_template(g.xchi)));
    if (g.table == "char3") {
      ++char3;
      SymbolTemplate x(latex_to_template(g.x)), xchi(latex_to_template(g.xchi));
      for (std::int64_t N : {-2, -1, 0, 1, 5}) CHECK(char3_twist(x.instantiate({{"N", N}})) == xchi.instantiate({{"N", N}}));
    }
  }
  CHECK(char5 == char5_twist_table());
  CHECK(char3 == 2);
  CHECK_THROWS_AS(char3_twist(ReductionSymbol::parse("IV")), Error);
}

TEST_CASE("symbol grammar") {
  for (const char* s : {"Istar[2,0,0]", "IX[3]", "IV-II[5]", "II", "Vstar", "2I0star[1]", "I0-IIIstar[-1]"})
    CHECK(ReductionSymbol::parse(s).format() == s);
  ReductionSymbol a = ReductionSymbol::parse("IV-II[5]");
  CHECK(a.family == "IV-II");
  CHECK(a.params == std::vector<std::int64_t>{5});
  for (const char* bad : {"", "IV-", "Foo[1]", "II[", "II[1,]", "II[a]", "IV--II[1]", "II[1]x"})
    CHECK_THROWS_AS(ReductionSymbol::parse(bad), Error);
  CHECK(valid_family("2I0star"));
  CHECK_FALSE(valid_family("XI"));
}

TEST_CASE("templates") {
  SymbolTemplate t("IV-II[(d-2)/3]");
  CHECK(t.family() == "IV-II");
  CHECK(t.variables() == std::vector<std::string>{"d"});
  CHECK(t.instantiate({{"d", 8}}).format() == "IV-II[2]");
  try {
    t.instantiate({{"d", 7}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterConstraint);
  }
  CHECK_THROWS_AS(t.instantiate({}), Error);
  CHECK(evaluate_expression("(d1-2)*3+n/2", {{"d1", 5}, {"n", 4}}) == 11);
  CHECK(evaluate_expression("-3+1", {}) == -2);
  CHECK_THROWS_AS(SymbolTemplate("IV[(d-2"), Error);
}

TEST_CASE("within each table no two rows share a pattern") {
  // Enumerate residues for every tabulated n and both parities, omega statuses and remark branches.
  const auto& rows = table_rows();
  for (const char* table : kTableNames) {
    std::set<std::int64_t> ns;
    for (const auto& row : rows)
      if (row.table == table) ns.insert(row.n);
    for (std::int64_t n : ns)
      for (std::int64_t r = 0; r < 2 * n; ++r)
        for (std::int64_t q = 0; q < n; ++q)
          for (std::int64_t d = 0; d < n; ++d)
            for (int parity = 0; parity < 2; ++parity)
              for (OmegaStatus om : {OmegaStatus::NonRamified, OmegaStatus::RamifiedSingularPreimage}) {
                int matches = 0;
                for (const auto& row : rows) {
                  if (row.table != table || row.n != n) continue;
                  auto in = [&](const ResidueSet& s, std::int64_t v) {
                    if (s.values.empty()) return true;
                    std::int64_t m = s.modulus ? s.modulus : n;
                    return values(s).count(((v % m) + m) % m) > 0;
                  };
                  bool odd_table = std::string(table) == "two-elliptic-odd";
                  std::int64_t rv = odd_table ? r : r % n;
                  if (!odd_table && r >= n) continue;
                  if (!in(row.r, rv) || !in(row.q, q) || !in(row.d, d)) continue;
                  if (row.j2_even && *row.j2_even != (parity == 0)) continue;
                  if (row.preimage == Preimage::Regular && om == OmegaStatus::RamifiedSingularPreimage) continue;
                  if (row.preimage == Preimage::Singular && om != OmegaStatus::RamifiedSingularPreimage) continue;
                  if (row.remark == RemarkBranch::IqFirst) continue;  // the two branches split on the flag
                  ++matches;
                }
                INFO(table << " n=" << n << " r=" << r << " q=" << q << " d=" << d);
                CHECK(matches <= 1);
              }
  }
}

TEST_CASE("lookups") {
  TableQuery s;
  s.shape = FiberCase::Smooth;
  s.ram.n = 3;
  CHECK(lookup(s).x.format() == "III");
  CHECK(lookup(s).xchi.format() == "IV");
  s.ram.n = 5;
  s.ram.r = 1;
  CHECK(lookup(s).x.format() == "IX[3]");
  CHECK(lookup(s).xchi.format() == "VIII[1]");
  s.ram.n = 7;
  try {
    lookup(s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoMatchingRow);
  }

  TableQuery e;
  e.shape = FiberCase::TwoSmoothOneNode;
  e.ram.n = 1;
  e.ram.d = 4;
  e.ram.j2_even = true;
  e.degrees = SingularityDegrees{FiberCase::TwoSmoothOneNode, {4}};
  CHECK(lookup(e).x.format() == "I0-I0[4]");
  CHECK(lookup(e).xchi.format() == "I0star-I0star[3]");

  TableQuery o;
  o.shape = FiberCase::IrreducibleOneNode;
  o.ram.n = 2;
  o.ram.r = 1;
  o.ram.q = 0;
  o.degrees = SingularityDegrees{FiberCase::IrreducibleOneNode, {6}};
  CHECK(lookup(o).x.format() == "IIstar[3,0]");
  CHECK(lookup(o).xchi.format() == "II[3,0]");

  TableQuery t;
  t.shape = FiberCase::IrreducibleTwoNodes;
  t.ram.n = 2;
  t.ram.r = 1;
  t.omega = OmegaStatus::RamifiedRegularPreimage;
  t.degrees = SingularityDegrees{FiberCase::IrreducibleTwoNodes, {3, 3}};
  CHECK(lookup(t).x.format() == "2I[3,0]");
  CHECK(lookup(t).xchi.format() == "2I[3,0]");
  t.degrees = SingularityDegrees{FiberCase::IrreducibleTwoNodes, {3, 5}};
  CHECK_THROWS_AS(lookup(t), Error);
}

TEST_CASE("char 3 wild types") {
  const Rational three(3), nine(9);
  // nu(c3) = 1, nu(c4) = 1, nu(c5) = 2, nu(c6) = 2: N = min{3-4, 6-5, 6-6} = -1.
  std::array<Rational, 6> c{1, 1, three, three, nine, nine};
  CHECK(wild_char3_type(1, c).format() == "III[-1]");
  CHECK(wild_char3_type(1, c, three).format() == "IIIstar[-1]");
  CHECK(wild_char3_type(three, c).format() == "IIIstar[-1]");
  CHECK(wild_char3_type(three, c, three).format() == "III[-1]");
  c[2] = 27;
  CHECK_THROWS_AS(wild_char3_type(1, c), Error);
}

TEST_CASE("char 5 wild types") {
  auto form = [](int v6) {
    std::array<Rational, 7> b{5, 1, 1, 1, 1, 1, 1};
    Rational x = 1;
    for (int i = 0; i < v6; ++i) x *= 5;
    b[6] = x * 2;
    return b;
  };
  CHECK(wild_char5_type(form(2)).format() == "IX[1]");
  CHECK(wild_char5_type(form(2), Rational(5)).format() == "VIII[3]");
  CHECK(wild_char5_type(form(6), Rational(5)).format() == "VIII[1]");
  CHECK(wild_char5_type(form(1)).format() == "VIII[1]");
  CHECK(wild_char5_type(form(7)).format() == "VIII[3]");
  CHECK_THROWS_AS(wild_char5_type(form(5)), Error);
  CHECK_THROWS_AS(wild_char5_type(form(10)), Error);
  // The twist by D = 5 agrees with the printed table on every normal form.
  for (int v : {1, 2, 3, 4, 6, 7, 8, 9}) {
    ReductionSymbol x = wild_char5_type(form(v));
    ReductionSymbol y = wild_char5_type(form(v), Rational(5));
    bool listed = false;
    for (const auto& [a, b] : char5_twist_table())
      if (a == x) {
        listed = true;
        CHECK(b == y);
      }
    CHECK(listed);
  }
}
