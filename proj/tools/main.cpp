#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "g2twist/error.hpp"
#include "records.hpp"

using namespace g2t;
using namespace g2t::cli;

namespace {

struct CurveFlags {
  std::string id = "cli";
  std::string prime;
  std::string coeffs;
  std::string e1_smooth;
  std::string char3;
  std::string char5;
  std::string d;

  void add(CLI::App* cmd, bool with_d) {
    cmd->add_option("--prime,-p", prime, "odd prime p")->required();
    cmd->add_option("--coeffs,-c", coeffs, "a0,...,a6 of y^2 = a0 x^6 + ... + a6")->required();
    cmd->add_option("--id", id, "record id");
    cmd->add_option("--e1-smooth", e1_smooth, "true|false, for rows split on smoothness of E1");
    cmd->add_option("--char3", char3, "a0,c1,...,c6 of the char-3 normal form");
    cmd->add_option("--char5", char5, "b0,...,b6 of the char-5 normal form");
    if (with_d) cmd->add_option("--d,-d", d, "twisting parameter D")->required();
  }

  CurveRecord record() const {
    CurveRecord r;
    r.id = id;
    r.prime = parse_prime(prime);
    std::vector<Rational> c = parse_list(coeffs, 7);
    std::copy(c.begin(), c.end(), r.coeffs.begin());
    if (!d.empty()) r.D = parse_rational(d);
    if (!e1_smooth.empty()) r.opts.e1_smooth = parse_bool(e1_smooth);
    if (!char3.empty()) r.opts.wild.char3 = parse_char3(char3);
    if (!char5.empty()) r.opts.wild.char5 = parse_char5(char5);
    return r;
  }
};

std::uint64_t default_seed() {
  const char* env = std::getenv("GENUS2_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  std::uint64_t s = std::strtoull(env, &end, 10);
  if (*end) throw Error(ErrorKind::InvalidInput, "input", std::string("GENUS2_SEED is not an integer: ") + env);
  return s;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) out.push_back(parse_prime(part));
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "input", "no primes given");
  return out;
}

json curve_record(const SexticForm& f, std::uint32_t p, const Rational& d, const std::string& id) {
  CurveRecord r;
  r.id = id;
  r.coeffs = f.coefficients();
  r.prime = p;
  r.D = d;
  return analyze_record(r);
}

void print_summary(const SweepSummary& s, std::ostream& os) {
  auto row = [&](const std::string& k, const auto& v) { os << "  " << std::left << std::setw(26) << k << v << "\n"; };
  os << "samples " << s.total << "\n";
  for (CheckStatus st : {CheckStatus::Agree, CheckStatus::Disagree, CheckStatus::RouteMismatch,
                         CheckStatus::Unclassifiable, CheckStatus::Wild})
    row(std::string(to_string(st)), s.count(st));
  os << std::fixed << std::setprecision(4);
  row("classifiable fraction", s.classifiable_fraction());
  row("non-smooth fraction", s.nonsmooth_fraction());
  row("agreement rate", s.agreement_rate());
  row("lemma violations", s.lemma_violation_samples);
  row("primed row disagreements", s.primed_row_disagreements);
  row("E1 flag relaxed", s.relaxed_flag_samples);
  os << "shapes (classified)\n";
  for (const auto& [k, v] : s.shapes) row(k, v);
  if (!s.errors.empty()) os << "errors by kind (either route)\n";
  for (const auto& [k, v] : s.errors) row(k, v);
}

int run_verify(const std::string& input, std::size_t samples, std::optional<std::uint64_t> seed,
               const std::string& primes, int d_power, unsigned threads, const std::string& jsonl) {
  SweepSummary s;
  std::vector<std::string> ids;
  std::vector<std::uint32_t> sample_primes;
  if (!input.empty()) {
    std::vector<CurveRecord> recs = read_records(input);
    for (const auto& r : recs) SexticForm check(r.coeffs);
    std::vector<CrossCheck> checks(recs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < recs.size();) {
        const CurveRecord& r = recs[i];
        checks[i] = cross_check(SexticForm(r.coeffs), r.D.value_or(Rational(r.prime)), LocalContext(r.prime), r.opts);
      }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const auto& r : recs) ids.push_back(r.id), sample_primes.push_back(r.prime);
    s = summarize(std::move(checks));
  } else {
    SweepOptions o;
    o.samples = samples;
    o.seed = seed ? *seed : default_seed();
    o.primes = parse_primes(primes);
    o.d_power = d_power;
    o.threads = threads;
    s = sweep(o);
    std::cout << "seed " << o.seed << "\n";
    for (std::size_t i = 0; i < s.samples.size(); ++i)
      ids.push_back(std::to_string(i)), sample_primes.push_back(s.samples[i].prime);
  }

  if (!jsonl.empty()) {
    std::ofstream out(jsonl);
    if (!out) throw Error(ErrorKind::InvalidInput, "input", "cannot write " + jsonl);
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      const CrossCheck& c = s.samples[i];
      json j = curve_record(c.curve, sample_primes[i], c.D, ids[i]);
      j["check"] = check_json(c);
      out << j.dump() << "\n";
    }
  }
  print_summary(s, std::cout);
  const bool bad = s.count(CheckStatus::Disagree) || s.lemma_violation_samples || s.primed_row_disagreements;
  return bad ? 2 : 0;
}

int run_audit() {
  AuditReport a = table_involution_audit();
  std::cout << "tuples " << a.tuples << ", matched " << a.matched << ", unmatched " << a.unmatched
            << ", constraint failures " << a.constraint_failures << ", skipped " << a.skipped << ", checked "
            << a.checked << "\n";
  std::cout << "rows never hit " << a.rows_never_hit.size() << "\n";
  auto list = [](const char* name, const std::vector<std::string>& v) {
    std::cout << name << " " << v.size() << "\n";
    for (const auto& s : v) std::cout << "  " << s << "\n";
  };
  list("involution violations", a.violations);
  list("double twist violations", a.double_twist_violations);
  list("overlapping rows", a.overlaps);
  list("wild table violations", a.wild_violations);
  return a.clean() ? 0 : 2;
}

int run_batch(const std::string& input, const std::string& output, unsigned workers, const std::string& d) {
  std::vector<CurveRecord> recs = read_records(input);
  if (!d.empty()) {
    Rational dv = parse_rational(d);
    for (auto& r : recs)
      if (!r.D) r.D = dv;
  }
  std::vector<std::string> lines(recs.size());
  std::vector<Outcome> outcomes(recs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < recs.size();)
      lines[i] = analyze_record(recs[i], &outcomes[i]).dump();
  };
  unsigned n = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, recs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw Error(ErrorKind::InvalidInput, "input", "cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  for (const auto& l : lines) out << l << "\n";

  int code = 0;
  for (Outcome o : outcomes) {
    if (o == Outcome::InputError) return 1;
    if (o == Outcome::ClassificationError) code = 2;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduction types of quadratic twists of genus 2 curves"};
  app.require_subcommand(1);

  CurveFlags inv_flags, cls_flags, tw_flags;
  auto* inv = app.add_subcommand("invariants", "invariants of the sextic and their valuations");
  inv_flags.add(inv, false);
  auto* cls = app.add_subcommand("classify", "stable shape, ramification data and type of X");
  cls_flags.add(cls, false);
  auto* tw = app.add_subcommand("twist", "type of the quadratic twist by D");
  tw_flags.add(tw, true);

  auto* ver = app.add_subcommand("verify", "compare table predictions with direct classification of D P");
  std::string v_input, v_primes = "7,11,13", v_jsonl;
  std::size_t v_samples = 500;
  std::optional<std::uint64_t> v_seed;
  int v_dpow = 1;
  unsigned v_threads = 0;
  ver->add_option("--input", v_input, "records to check (CSV or JSON); D defaults to p");
  ver->add_option("--samples", v_samples, "random samples");
  ver->add_option("--seed", v_seed, "sweep seed (default: GENUS2_SEED, else 1)");
  ver->add_option("--primes", v_primes, "comma-separated primes");
  ver->add_option("--d-power", v_dpow, "D = p^k")->check(CLI::Range(0, 8));
  ver->add_option("--threads", v_threads, "worker threads (0: all cores)");
  ver->add_option("--jsonl", v_jsonl, "write one JSON record per sample");

  auto* aud = app.add_subcommand("audit-tables", "involution and disjointness audits of the tables");

  auto* bat = app.add_subcommand("batch", "classify records from CSV or JSON, JSON lines out");
  std::string b_input, b_output, b_d;
  unsigned b_workers = 0;
  bat->add_option("--input", b_input, "CSV (id,a0..a6,p,D) or JSON")->required();
  bat->add_option("--output", b_output, "output file (default: stdout)");
  bat->add_option("--workers", b_workers, "worker threads (0: all cores)");
  bat->add_option("--d", b_d, "D for records that do not give one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*inv) {
      std::cout << invariants_record(inv_flags.record()).dump(2) << "\n";
      return 0;
    }
    if (*cls || *tw) {
      Outcome o = Outcome::Ok;
      json j = analyze_record((*cls ? cls_flags : tw_flags).record(), &o);
      std::cout << j.dump(2) << "\n";
      for (const auto& e : j["errors"]) std::cerr << e["stage"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
      return static_cast<int>(o);
    }
    if (*ver) return run_verify(v_input, v_samples, v_seed, v_primes, v_dpow, v_threads, v_jsonl);
    if (*aud) return run_audit();
    if (*bat) return run_batch(b_input, b_output, b_workers, b_d);
  } catch (const Error& e) {
    std::cerr << e.stage() << ": " << e.what() << "\n";
    return e.is_input_error() ? 1 : 2;
  }
  return 0;
}
