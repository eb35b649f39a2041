#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2twist/error.hpp"
#include "g2twist/twist.hpp"

namespace g2t {

/// One route's outcome for one value of the E1 flag.
struct RouteResult {
  std::optional<ReductionSymbol> symbol;
  std::optional<FiberCase> shape;
  std::optional<RamData> ram;
  std::optional<SingularityDegrees> degrees;
  bool wild = false;
  std::optional<ErrorKind> error_kind;
  std::string error_stage;
  std::string error;

  bool ok() const { return symbol.has_value(); }
};

enum class CheckStatus {
  Agree,
  Disagree,
  RouteMismatch,   // exactly one route classifies
  Unclassifiable,  // neither route classifies
  Wild,            // tame tables do not apply (normal form supplied or required)
};

std::string_view to_string(CheckStatus s);

struct CrossCheck {
  SexticForm curve;
  Rational D;
  std::uint32_t prime = 0;
  CheckStatus status = CheckStatus::Unclassifiable;
  /// The flag values tried; two entries when a Remark row needed the E1 flag and none was given.
  std::vector<std::optional<bool>> flags;
  /// Route A (table prediction from C) and route B (direct classification of D P), per flag.
  std::vector<RouteResult> route_a, route_b;
  std::optional<FiberCase> shape;
  std::vector<std::string> lemma_violations;
  /// Route A's X^chi column equals the X column of the row picked by the primed data.
  bool primed_row_agrees = true;
  std::optional<std::string> primed_row_error;
};

CrossCheck cross_check(const SexticForm& p, const Rational& d, const LocalContext& ctx,
                       const AnalysisOptions& opts = {});

/// Random squarefree integral sextic biased towards bad reduction: clustered roots, p-power
/// leading coefficients, occasional degree 5 and irreducible quadratic factors.
SexticForm biased_sextic(std::mt19937_64& rng, std::uint32_t p);

/// Engine for sample i of a sweep with the given seed.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

struct SweepOptions {
  std::vector<std::uint32_t> primes{7, 11, 13};
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  /// D = p^d_power.
  int d_power = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepSummary {
  std::size_t total = 0;
  std::map<CheckStatus, std::size_t> by_status;
  std::map<std::string, std::size_t> shapes;  // over samples where both routes classify
  std::map<std::string, std::size_t> errors;  // by error kind, either route
  std::size_t lemma_violation_samples = 0;
  std::size_t primed_row_disagreements = 0;
  std::size_t relaxed_flag_samples = 0;
  std::vector<CrossCheck> samples;  // sorted by sample index

  std::size_t count(CheckStatus s) const;
  std::size_t classified() const { return count(CheckStatus::Agree) + count(CheckStatus::Disagree); }
  double classifiable_fraction() const;
  double nonsmooth_fraction() const;
  double agreement_rate() const;
};

SweepSummary sweep(const SweepOptions& opts);
/// Tallies checks produced elsewhere (e.g. from an input file).
SweepSummary summarize(std::vector<CrossCheck> samples);

/// Table audits over synthetic data: every grid point of base-field valuations (sources and
/// degrees) for each regime and omega status is looked up, twisted with the lemma shifts and
/// looked up again.
struct AuditReport {
  std::size_t tuples = 0;
  std::size_t matched = 0;             // the X lookup instantiated
  std::size_t unmatched = 0;           // no row (the data need not come from a curve)
  std::size_t constraint_failures = 0; // a row matched but its subscripts are not integers
  std::size_t skipped = 0;             // twisted degrees not integral
  std::size_t checked = 0;             // both lookups instantiated and compared
  std::vector<std::size_t> rows_never_hit;
  /// X^chi column of row R differs from the X column of the twisted row, or vice versa, or
  /// the twisted data select no row.
  std::vector<std::string> violations;
  /// Twisting the sources twice does not return (n, r, q, d).
  std::vector<std::string> double_twist_violations;
  /// Data matched by more than one row.
  std::vector<std::string> overlaps;
  /// Char-3 and char-5 wild tables: involution and agreement with the smooth n = 5, 10 rows.
  std::vector<std::string> wild_violations;

  bool clean() const {
    return violations.empty() && double_twist_violations.empty() && overlaps.empty() && wild_violations.empty();
  }
};

AuditReport table_involution_audit();

/// The smooth rows with n = 5 or 10 as a map x -> xchi; the char-5 wild table must equal it.
std::vector<std::pair<ReductionSymbol, ReductionSymbol>> smooth_n5_n10_map();

}  // namespace g2t
