#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2twist/ramification.hpp"
#include "g2twist/stable.hpp"
#include "g2twist/symbol.hpp"

namespace g2t {

/// Everything a table row may look at.
struct TableQuery {
  FiberCase shape = FiberCase::Smooth;
  RamData ram;
  SingularityDegrees degrees;
  OmegaStatus omega = OmegaStatus::NonRamified;
  /// One smooth and one singular component: q = nu(J2 J10 I12^-1).
  std::optional<std::int64_t> remark_q;
  /// Whether the component E1 (the one whose image contains omega-bar) is smooth. Only the
  /// n = 2, d odd rows of that table need it.
  std::optional<bool> e1_smooth;
};

enum class Preimage { Any, Regular, Singular };
enum class RemarkBranch { None, I0First, IqFirst };
enum class DegreeConstraint { None, D1EqualsD2, AllEqual, PairEqual };

struct ResidueSet {
  std::int64_t modulus = 0;  // 0 means n
  std::vector<std::int64_t> values;  // empty means any
};

struct TableRow {
  std::string table;
  FiberCase shape = FiberCase::Smooth;
  std::string predicate;  // as written in the row list, e.g. "n=6 d=1 r=0,1"
  std::int64_t n = 1;
  ResidueSet r, q, d;
  std::optional<bool> j2_even;
  Preimage preimage = Preimage::Any;
  RemarkBranch remark = RemarkBranch::None;
  DegreeConstraint constraint = DegreeConstraint::None;
  SymbolTemplate x, xchi;
};

/// Table names, one per stable-fiber table.
inline constexpr std::array<const char*, 8> kTableNames = {
    "smooth", "one-node", "two-nodes", "c000", "two-elliptic-even", "two-elliptic-odd", "elliptic-rational",
    "two-rational"};

const std::vector<TableRow>& table_rows();

/// Variables available to the row templates: n, r, q, d, d1, d2, d3, e1, e2 as defined for
/// each shape. Unavailable ones are absent.
Bindings bindings_of(const TableQuery& q);

/// The predicate alone (no degree constraints). Throws Error(MissingFlag) if the row needs the
/// E1 flag and the query has none.
bool row_matches(const TableRow& row, const TableQuery& q);

struct TableLookup {
  std::size_t row = 0;
  ReductionSymbol x;
  ReductionSymbol xchi;
};

/// The unique matching row, instantiated. Throws Error(NoMatchingRow), Error(MissingFlag) or
/// Error(ParameterConstraint).
TableLookup lookup(const TableQuery& q);

inline ReductionSymbol reduction_type_of_X(const TableQuery& q) { return lookup(q).x; }
inline TableLookup reduction_type_of_twist(const TableQuery& q) { return lookup(q); }

/// Characteristic 3, normal form z^2 = a0 ((u^3 + c1 u^2 + c2 u + c3)^2 + c4 u^2 + c5 u + c6).
/// `c` holds c1..c6. With `d` given (nu(D) odd) the twisted curve is classified instead.
/// Throws Error(NormalFormRequired) unless nu(c3) is 1 or 2.
ReductionSymbol wild_char3_type(const Rational& a0, const std::array<Rational, 6>& c,
                                const std::optional<Rational>& d = std::nullopt);

/// Characteristic 5, normal form z^2 = b0 u^6 + ... + b6 with nu(b0) >= 1, nu(b1) = 0,
/// 1 <= nu(b6) <= 9, nu(b6) != 5. Throws Error(NormalFormRequired) otherwise.
ReductionSymbol wild_char5_type(const std::array<Rational, 7>& b);

/// The coefficient substitutions taking the normal form of C to one of its twist by D
/// (nu(D) = 1): scaling by D and powers of t, the Moebius step when nu(b0') = 0, and
/// u -> t^2 u when nu(b6') > 9.
std::array<Rational, 7> char5_twisted_form(const std::array<Rational, 7>& b, const Rational& d);

/// wild_char5_type of the twisted form, or of b itself when d is absent.
ReductionSymbol wild_char5_type(const std::array<Rational, 7>& b, const std::optional<Rational>& d);

/// The char-5 twist table of the wild corollary, as printed: type(X) -> type(X^chi).
const std::vector<std::pair<ReductionSymbol, ReductionSymbol>>& char5_twist_table();

/// Char 3: III[N] <-> IIIstar[N]. Throws Error(InvalidInput) for any other symbol.
ReductionSymbol char3_twist(const ReductionSymbol& s);

}  // namespace g2t
