#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2twist/ramification.hpp"
#include "g2twist/stable.hpp"
#include "g2twist/tables.hpp"

namespace g2t {

/// Normal-form coefficients for the wild cases, supplied by the caller.
struct WildInput {
  struct Char3 {
    Rational a0;
    std::array<Rational, 6> c;  // c1..c6
  };
  std::optional<Char3> char3;
  std::optional<std::array<Rational, 7>> char5;  // b0..b6
};

struct AnalysisOptions {
  std::optional<bool> e1_smooth;
  WildInput wild;
};

/// Every intermediate of the untwisted pipeline for one curve.
struct CurveAnalysis {
  SexticForm input;
  NormalizedModel model;
  InvariantSet inv;
  StableFiberType stable;
  std::optional<SpecialFiberTests> tests;
  std::optional<J12Selector> j12;
  std::optional<OmegaStatus> omega;
  bool tame = true;
  std::optional<RamSources> sources;
  std::optional<RamData> ram;
  std::optional<SingularityDegrees> degrees;
  std::optional<std::int64_t> remark_q;
  std::optional<TableLookup> table;
  std::optional<ReductionSymbol> type_X;

  TableQuery query(const AnalysisOptions& opts) const;
};

/// Runs the full pipeline on P. Throws Error tagged with the failing stage; wild cases without
/// normal-form input raise Error(NormalFormRequired).
CurveAnalysis analyze(const SexticForm& p, const LocalContext& ctx, const AnalysisOptions& opts = {});

struct TwistParity {
  bool ramified = false;
  /// D divided by the even power of t that makes nu = 0 or 1.
  Rational normalized;
};

TwistParity twist_parity(const Rational& d, const LocalContext& ctx);

/// Identity: the stable fiber of the twist has the same shape.
inline FiberCase twist_stable_shape(FiberCase shape) { return shape; }

/// Primed data of the twist by D with nu(D) = 1, via the lemma shifts.
inline RamData twist_ram_data(const RamSources& s) { return ram_data(twist_sources(s)); }

struct TwistReport {
  CurveAnalysis x;
  Rational D;
  TwistParity parity;
  bool wild = false;

  FiberCase shape_chi = FiberCase::Smooth;
  std::optional<InvariantSet> inv_chi;
  std::optional<OmegaStatus> omega_chi;
  std::optional<RamSources> sources_chi;
  std::optional<RamData> ram_chi;
  std::optional<SingularityDegrees> degrees_chi;

  std::optional<ReductionSymbol> type_X;
  std::optional<ReductionSymbol> type_Xchi;
  /// The X column of the row selected by the primed data; equals type_Xchi when the tables
  /// are consistent with the lemmas.
  std::optional<ReductionSymbol> type_Xchi_primed_row;
  /// Set when the primed data select no row (or an invalid one).
  std::optional<std::string> primed_row_error;

  /// Failed checks of the lemma relations (empty when all hold).
  std::vector<std::string> lemma_violations;
};

TwistReport run_twist(const SexticForm& p, const Rational& d, const LocalContext& ctx,
                      const AnalysisOptions& opts = {});

}  // namespace g2t
