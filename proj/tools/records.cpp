#include "records.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "g2twist/error.hpp"
#include "g2twist/ramification.hpp"

namespace g2t::cli {

namespace {

Error input_error(const std::string& what) { return Error(ErrorKind::InvalidInput, "input", what); }

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

json rational(const Rational& x) { return to_string(x); }

json optional_val(Val v) { return v.is_infinite() ? json(nullptr) : json(v.value()); }

json error_json(const Error& e) { return {{"stage", e.stage()}, {"kind", to_string(e.kind())}, {"message", e.what()}}; }

json ram_json(const RamData& r) {
  json j{{"n", r.n}, {"r", r.r}, {"q", nullptr}, {"dK", nullptr}, {"d", nullptr}, {"rK", nullptr}, {"j2_even", nullptr}};
  if (r.q) j["q"] = *r.q;
  if (r.dK) j["dK"] = rational(*r.dK);
  if (r.d) j["d"] = *r.d;
  if (r.rK) j["rK"] = rational(*r.rK);
  if (r.j2_even) j["j2_even"] = *r.j2_even;
  return j;
}

json symbol(const std::optional<ReductionSymbol>& s) { return s ? json(s->format()) : json(nullptr); }

json valuations_json(const InvariantSet& inv, const LocalContext& ctx) {
  InvariantValuations v = valuations(inv, ctx);
  return {{"J2", optional_val(v.J2)}, {"J4", optional_val(v.J4)},   {"J6", optional_val(v.J6)},
          {"J8", optional_val(v.J8)}, {"J10", optional_val(v.J10)}, {"I2", optional_val(v.I2)},
          {"I4", optional_val(v.I4)}, {"I6", optional_val(v.I6)},   {"I8", optional_val(v.I8)},
          {"I12", optional_val(v.I12)}, {"A2", optional_val(v.A2)}, {"A3", optional_val(v.A3)},
          {"A4", optional_val(v.A4)}, {"A5", optional_val(v.A5)},   {"B2", optional_val(v.B2)}};
}

json invariants_json(const InvariantSet& inv) {
  return {{"J2", rational(inv.J2)}, {"J4", rational(inv.J4)},   {"J6", rational(inv.J6)},
          {"J8", rational(inv.J8)}, {"J10", rational(inv.J10)}, {"I2", rational(inv.I2)},
          {"I4", rational(inv.I4)}, {"I6", rational(inv.I6)},   {"I8", rational(inv.I8)},
          {"I12", rational(inv.I12)}, {"A2", rational(inv.A2)}, {"A3", rational(inv.A3)},
          {"A4", rational(inv.A4)}, {"A5", rational(inv.A5)},   {"B2", rational(inv.B2)}};
}

json base_record(const CurveRecord& rec) {
  json coeffs = json::array();
  for (const Rational& a : rec.coeffs) coeffs.push_back(rational(a));
  return {{"schema_version", 1}, {"id", rec.id}, {"prime", rec.prime}, {"coefficients", coeffs}, {"errors", json::array()}};
}

std::string scalar_text(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw input_error(what + ": expected a number or a string");
}

std::vector<std::string> list_text(const json& v, const std::string& what) {
  if (v.is_string()) return split(v.get<std::string>(), ',');
  if (!v.is_array()) throw input_error(what + ": expected a list");
  std::vector<std::string> out;
  for (const json& x : v) out.push_back(scalar_text(x, what));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

CurveRecord record_from_json(const json& o, std::size_t index) {
  if (!o.is_object()) throw input_error("record " + std::to_string(index) + ": expected an object");
  CurveRecord rec;
  rec.id = o.contains("id") ? scalar_text(o["id"], "id") : std::to_string(index);
  std::vector<Rational> c;
  if (o.contains("coefficients")) {
    c = parse_list(join(list_text(o["coefficients"], "coefficients")), 7);
  } else {
    for (int i = 0; i <= 6; ++i) {
      std::string key = "a" + std::to_string(i);
      if (!o.contains(key)) throw input_error("record " + rec.id + ": missing " + key);
      c.push_back(parse_rational(scalar_text(o[key], key)));
    }
  }
  std::copy(c.begin(), c.end(), rec.coeffs.begin());
  const char* pkey = o.contains("prime") ? "prime" : "p";
  if (!o.contains(pkey)) throw input_error("record " + rec.id + ": missing prime");
  rec.prime = parse_prime(scalar_text(o[pkey], "prime"));
  for (const char* dkey : {"D", "d"})
    if (o.contains(dkey) && !o[dkey].is_null()) rec.D = parse_rational(scalar_text(o[dkey], "D"));
  if (o.contains("e1_smooth") && !o["e1_smooth"].is_null()) {
    if (!o["e1_smooth"].is_boolean()) throw input_error("e1_smooth: expected a boolean");
    rec.opts.e1_smooth = o["e1_smooth"].get<bool>();
  }
  if (o.contains("char3")) rec.opts.wild.char3 = parse_char3(join(list_text(o["char3"], "char3")));
  if (o.contains("char5")) rec.opts.wild.char5 = parse_char5(join(list_text(o["char5"], "char5")));
  return rec;
}

}  // namespace

std::vector<Rational> parse_list(const std::string& text, std::size_t count) {
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_rational(part));
  if (out.size() != count)
    throw input_error("expected " + std::to_string(count) + " values, got " + std::to_string(out.size()));
  return out;
}

std::uint32_t parse_prime(const std::string& text) {
  std::string t = trim(text);
  if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("prime must be a positive integer, got '" + text + "'");
  std::uint32_t p = static_cast<std::uint32_t>(std::stoul(t));
  LocalContext check(p);
  return p;
}

bool parse_bool(const std::string& text) {
  std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw input_error("expected true or false, got '" + text + "'");
}

WildInput::Char3 parse_char3(const std::string& text) {
  std::vector<Rational> v = parse_list(text, 7);
  WildInput::Char3 out{v[0], {}};
  std::copy(v.begin() + 1, v.end(), out.c.begin());
  return out;
}

std::array<Rational, 7> parse_char5(const std::string& text) {
  std::vector<Rational> v = parse_list(text, 7);
  std::array<Rational, 7> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<CurveRecord> read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line))
    if (!trim(line).empty()) header = split(line, ',');
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"a0", "a1", "a2", "a3", "a4", "a5", "a6", "p"})
    if (!col.count(need)) throw input_error(std::string("CSV header lacks column ") + need);

  std::vector<CurveRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (cells.size() != header.size())
      throw input_error("CSV line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                        " cells, got " + std::to_string(cells.size()));
    auto cell = [&](const char* name) -> std::optional<std::string> {
      auto it = col.find(name);
      if (it == col.end() || cells[it->second].empty()) return std::nullopt;
      return cells[it->second];
    };
    json o;
    o["id"] = cell("id").value_or(std::to_string(out.size() + 1));
    for (int i = 0; i <= 6; ++i) {
      std::string key = "a" + std::to_string(i);
      auto v = cell(key.c_str());
      if (!v) throw input_error("CSV line " + std::to_string(lineno) + ": empty " + key);
      o[key] = *v;
    }
    o["p"] = cell("p").value_or("");
    if (auto d = cell("D")) o["D"] = *d;
    if (auto e = cell("e1_smooth")) o["e1_smooth"] = parse_bool(*e);
    for (const char* w : {"char3", "char5"})
      if (auto v = cell(w)) {
        std::string s = *v;
        std::replace(s.begin(), s.end(), ';', ',');
        o[w] = s;
      }
    out.push_back(record_from_json(o, out.size() + 1));
  }
  return out;
}

std::vector<CurveRecord> read_json(const std::string& text) {
  std::vector<CurveRecord> out;
  std::string t = trim(text);
  try {
    if (!t.empty() && t.front() == '[') {
      json arr = json::parse(t);
      for (const json& o : arr) out.push_back(record_from_json(o, out.size() + 1));
      return out;
    }
    std::istringstream in(t);
    std::string line;
    while (std::getline(in, line))
      if (!trim(line).empty()) out.push_back(record_from_json(json::parse(line), out.size() + 1));
  } catch (const json::exception& e) {
    throw input_error(std::string("JSON: ") + e.what());
  }
  return out;
}

std::vector<CurveRecord> read_records(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw input_error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  auto ends_with = [&](const char* s) {
    std::string suffix(s);
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".csv")) return read_csv(text);
  if (ends_with(".json") || ends_with(".jsonl")) return read_json(text);
  std::string t = trim(text);
  return !t.empty() && (t.front() == '[' || t.front() == '{') ? read_json(text) : read_csv(text);
}

json invariants_record(const CurveRecord& rec) {
  json j = base_record(rec);
  LocalContext ctx(rec.prime);
  InvariantSet inv = compute_invariants(SexticForm(rec.coeffs));
  j["invariants"] = invariants_json(inv);
  j["valuations"] = valuations_json(inv, ctx);
  return j;
}

json analyze_record(const CurveRecord& rec, Outcome* outcome) {
  json j = base_record(rec);
  for (const char* k : {"valuations", "stable_shape", "omega", "tame", "degrees", "ram", "type_X", "twist"})
    j[k] = nullptr;
  Outcome result = Outcome::Ok;
  auto fail = [&](const Error& e) {
    j["errors"].push_back(error_json(e));
    Outcome o = e.is_input_error() ? Outcome::InputError : Outcome::ClassificationError;
    if (result == Outcome::Ok || o == Outcome::InputError) result = o;
  };
  auto done = [&] {
    if (outcome) *outcome = result;
    return j;
  };

  std::optional<LocalContext> ctx;
  std::optional<SexticForm> form;
  try {
    ctx.emplace(rec.prime);
    form.emplace(rec.coeffs);
  } catch (const Error& e) {
    fail(e);
    return done();
  }

  try {
    InvariantSet inv = compute_invariants(normalize_model(*form, *ctx).form);
    j["valuations"] = valuations_json(inv, *ctx);
    j["stable_shape"] = to_string(classify_stable(inv, *ctx).kind);
  } catch (const Error&) {
    // analyze reports the same failure with its stage.
  }

  try {
    CurveAnalysis a = analyze(*form, *ctx, rec.opts);
    j["valuations"] = valuations_json(a.inv, *ctx);
    j["stable_shape"] = to_string(a.stable.kind);
    j["tame"] = a.tame;
    if (a.omega) j["omega"] = to_string(*a.omega);
    if (a.degrees) j["degrees"] = a.degrees->e;
    if (a.ram) j["ram"] = ram_json(*a.ram);
    j["type_X"] = symbol(a.type_X);
  } catch (const Error& e) {
    fail(e);
  }

  if (rec.D) {
    json t{{"D", rational(*rec.D)}};
    try {
      TwistReport r = run_twist(*form, *rec.D, *ctx, rec.opts);
      t["D_normalized"] = rational(r.parity.normalized);
      t["ramified"] = r.parity.ramified;
      t["wild"] = r.wild;
      t["stable_shape"] = to_string(r.shape_chi);
      t["omega"] = r.omega_chi ? json(to_string(*r.omega_chi)) : json(nullptr);
      t["type_Xchi"] = symbol(r.type_Xchi);
      t["primed"] = nullptr;
      if (r.ram_chi) {
        t["primed"] = ram_json(*r.ram_chi);
        t["primed"]["degrees"] = r.degrees_chi ? json(r.degrees_chi->e) : json(nullptr);
      }
      t["primed_row"] = symbol(r.type_Xchi_primed_row);
      if (r.primed_row_error) t["primed_row_error"] = *r.primed_row_error;
      t["lemma_violations"] = r.lemma_violations;
      if (j["type_X"].is_null()) j["type_X"] = symbol(r.type_X);
    } catch (const Error& e) {
      fail(e);
    }
    j["twist"] = t;
  }
  return done();
}

json check_json(const CrossCheck& c) {
  auto route = [](const RouteResult& r) {
    json j{{"symbol", symbol(r.symbol)}, {"wild", r.wild}};
    j["shape"] = r.shape ? json(to_string(*r.shape)) : json(nullptr);
    j["ram"] = r.ram ? ram_json(*r.ram) : json(nullptr);
    j["degrees"] = r.degrees ? json(r.degrees->e) : json(nullptr);
    j["error"] = nullptr;
    if (r.error_kind) j["error"] = {{"stage", r.error_stage}, {"kind", to_string(*r.error_kind)}, {"message", r.error}};
    return j;
  };
  json flags = json::array();
  for (const auto& f : c.flags) flags.push_back(f ? json(*f) : json(nullptr));
  json a = json::array(), b = json::array();
  for (const auto& r : c.route_a) a.push_back(route(r));
  for (const auto& r : c.route_b) b.push_back(route(r));
  json j{{"status", to_string(c.status)}, {"D", rational(c.D)},          {"e1_flags", flags},
         {"route_a", a},                  {"route_b", b},                 {"lemma_violations", c.lemma_violations},
         {"primed_row_agrees", c.primed_row_agrees}};
  j["stable_shape"] = c.shape ? json(to_string(*c.shape)) : json(nullptr);
  j["primed_row_error"] = c.primed_row_error ? json(*c.primed_row_error) : json(nullptr);
  return j;
}

}  // namespace g2t::cli
