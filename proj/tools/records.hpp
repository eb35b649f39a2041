#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2twist/twist.hpp"
#include "g2twist/verify.hpp"
#include "json.hpp"

namespace g2t::cli {

using nlohmann::json;

struct CurveRecord {
  std::string id;
  SexticForm::Coefficients coeffs{};
  std::uint32_t prime = 0;
  std::optional<Rational> D;
  AnalysisOptions opts;
};

/// "a,b,c" with exact rationals; throws Error(InvalidInput) unless there are `count` entries.
std::vector<Rational> parse_list(const std::string& text, std::size_t count);
std::uint32_t parse_prime(const std::string& text);
bool parse_bool(const std::string& text);
WildInput::Char3 parse_char3(const std::string& text);
std::array<Rational, 7> parse_char5(const std::string& text);

/// CSV with a header naming id, a0..a6, p and optionally D, e1_smooth, char3, char5
/// (the wild lists separated by ';').
std::vector<CurveRecord> read_csv(const std::string& text);
/// A JSON array of objects or one object per line.
std::vector<CurveRecord> read_json(const std::string& text);
/// Dispatches on the file extension, falling back to sniffing the first character.
std::vector<CurveRecord> read_records(const std::string& path);

enum class Outcome { Ok = 0, InputError = 1, ClassificationError = 2 };

/// Full record: invariants first, so valuations survive a later failure.
json analyze_record(const CurveRecord& rec, Outcome* outcome = nullptr);
json invariants_record(const CurveRecord& rec);
json check_json(const CrossCheck& c);

}  // namespace g2t::cli
