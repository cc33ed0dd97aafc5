#include "pcurv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace pcurv {

namespace {

using nlohmann::json;

json residues_json(const std::vector<std::pair<Rational, int>>& rs) {
  // One entry per root counted with multiplicity, already sorted by value.
  json arr = json::array();
  for (const auto& [value, mult] : rs)
    for (int i = 0; i < mult; ++i) arr.push_back(to_string(value));
  return arr;
}

std::string residues_text(const std::vector<std::pair<Rational, int>>& rs) {
  std::string out;
  for (const auto& [value, mult] : rs)
    for (int i = 0; i < mult; ++i) {
      if (!out.empty()) out += ", ";
      out += to_string(value);
    }
  return out;
}

json coeffs_json(const std::vector<std::uint64_t>& c) {
  json arr = json::array();
  for (std::uint64_t v : c) arr.push_back(std::to_string(v));
  return arr;
}

const char* curv_outcome_string(CurvOutcome o) {
  switch (o) {
    case CurvOutcome::Zero:
      return "zero";
    case CurvOutcome::NonZero:
      return "nonzero";
    case CurvOutcome::BadPrime:
      return "bad-prime";
  }
  return "?";
}

}  // namespace

std::string json_decide(const HondaResult& r) {
  json j;
  j["verdict"] = verdict_string(r.verdict.kind);
  if (const char* reason = reason_string(r.verdict.reason)) j["reason"] = reason;
  if (r.verdict.witness_prime != 0)
    j["witness_prime"] = std::to_string(r.verdict.witness_prime);
  if (r.verdict.kind == VerdictKind::Algebraic)
    j["residues"] = residues_json(r.verdict.residues);
  j["delta"] = to_string(r.delta);
  if (r.verdict.has_sigma) j["sigma"] = to_string(r.verdict.sigma);
  if (r.verdict.kind == VerdictKind::Inconclusive)
    j["checked_up_to"] = to_string(r.verdict.checked_up_to);
  return j.dump();
}

std::string text_decide(const HondaResult& r) {
  std::ostringstream os;
  os << "verdict: " << verdict_string(r.verdict.kind) << '\n';
  if (const char* reason = reason_string(r.verdict.reason))
    os << "reason: " << reason << '\n';
  if (r.verdict.witness_prime != 0)
    os << "witness prime: " << r.verdict.witness_prime << '\n';
  if (r.verdict.kind == VerdictKind::Algebraic)
    os << "residues: " << residues_text(r.verdict.residues) << '\n';
  os << "delta: " << to_string(r.delta) << '\n';
  if (r.verdict.has_sigma) os << "sigma: " << to_string(r.verdict.sigma) << '\n';
  if (r.verdict.prime_range_exceeded)
    os << "note: cutoff exceeds the supported prime range (2^62)\n";
  if (r.verdict.kind == VerdictKind::Inconclusive)
    os << "checked up to: " << to_string(r.verdict.checked_up_to) << '\n';
  return os.str();
}

std::string json_curvature(const CurvatureCheck& c, std::uint64_t p) {
  json j;
  j["p"] = std::to_string(p);
  j["outcome"] = curv_outcome_string(c.outcome);
  if (c.outcome != CurvOutcome::BadPrime) {
    j["shift"] = std::to_string(c.prefix.shift);
    j["n_reduced"] = c.prefix.n_reduced;
    j["prefix"] = coeffs_json(c.prefix.coeffs);
    if (c.outcome == CurvOutcome::NonZero)
      j["first_nonzero"] = c.prefix.first_nonzero();
  }
  return j.dump();
}

std::string text_curvature(const CurvatureCheck& c, std::uint64_t p) {
  std::ostringstream os;
  os << "p: " << p << '\n';
  os << "outcome: " << curv_outcome_string(c.outcome) << '\n';
  if (c.outcome != CurvOutcome::BadPrime) {
    os << "expansion point: " << c.prefix.shift << '\n';
    os << "reduced denominator degree: " << c.prefix.n_reduced << '\n';
    os << "checked prefix:";
    for (std::uint64_t v : c.prefix.coeffs) os << ' ' << v;
    os << '\n';
    if (c.outcome == CurvOutcome::NonZero)
      os << "first nonzero index: " << c.prefix.first_nonzero() << '\n';
  }
  return os.str();
}

std::string json_curvature_naive(const ModRatFun& f, std::uint64_t p) {
  json j;
  j["p"] = std::to_string(p);
  j["zero"] = f.is_zero();
  j["num"] = coeffs_json(f.num.c);
  j["den"] = coeffs_json(f.den.c);
  return j.dump();
}

std::string text_curvature_naive(const ModRatFun& f, std::uint64_t p) {
  std::ostringstream os;
  os << "p: " << p << '\n';
  os << "curvature is " << (f.is_zero() ? "zero" : "nonzero") << '\n';
  os << "numerator coefficients:";
  for (std::uint64_t v : f.num.c) os << ' ' << v;
  os << "\ndenominator coefficients:";
  for (std::uint64_t v : f.den.c) os << ' ' << v;
  os << '\n';
  return os.str();
}

std::string json_bounds(const BoundsReport& rep) {
  json j;
  j["delta"] = to_string(rep.delta);
  j["delta_cubed_upper"] = to_string(rep.delta_cubed_up.to_rational());
  j["root_bound"] = to_string(rep.root_bound.to_rational());
  j["M"] = to_string(rep.M);
  j["N"] = to_string(rep.N);
  j["sigma"] = to_string(rep.sigma);
  j["prime_range_exceeded"] = rep.prime_range_exceeded;
  return j.dump();
}

std::string text_bounds(const BoundsReport& rep) {
  std::ostringstream os;
  os << "delta: " << to_string(rep.delta) << '\n';
  os << "prime-power product bound: " << rep.delta_cubed_up.str() << '\n';
  os << "root magnitude bound: " << rep.root_bound.str() << '\n';
  os << "M: " << to_string(rep.M) << '\n';
  os << "N: " << to_string(rep.N) << '\n';
  os << "sigma: " << to_string(rep.sigma) << '\n';
  if (rep.prime_range_exceeded)
    os << "note: sigma exceeds the supported prime range (2^62)\n";
  return os.str();
}

std::string json_kronecker(const KroneckerVerdict& v) {
  json j;
  j["kind"] =
      v.kind == SplitKind::SplitsOverQ ? "splits-over-q" : "not-split";
  if (v.witness_prime != 0)
    j["witness_prime"] = std::to_string(v.witness_prime);
  j["via_root_certificate"] = v.via_root_certificate;
  j["sigma"] = to_string(v.sigma);
  j["checked_up_to"] = to_string(v.checked_up_to);
  if (v.kind == SplitKind::SplitsOverQ) j["roots"] = residues_json(v.roots);
  return j.dump();
}

std::string text_kronecker(const KroneckerVerdict& v) {
  std::ostringstream os;
  os << "verdict: "
     << (v.kind == SplitKind::SplitsOverQ ? "splits over Q" : "does not split")
     << '\n';
  if (v.witness_prime != 0)
    os << "witness prime: " << v.witness_prime << '\n';
  if (v.via_root_certificate)
    os << "decided by the rational-root oracle after the scan budget\n";
  os << "sigma: " << to_string(v.sigma) << '\n';
  os << "scanned primes up to: " << to_string(v.checked_up_to) << '\n';
  if (v.kind == SplitKind::SplitsOverQ)
    os << "roots: " << residues_text(v.roots) << '\n';
  return os.str();
}

std::string json_hp(const HPCertificate& c) {
  json j;
  j["M"] = c.M;
  j["N"] = c.N;
  j["sigma"] = c.sigma;
  j["lead"] = to_string(c.lead);
  j["verified"] = true;  // hp_verify throws instead of returning on failure
  json table = json::array();
  for (const auto& row : c.p) {
    json jrow = json::array();
    for (const AlphaRat& e : row) {
      json cell;
      cell["num"] = to_string(e.num, "a");
      cell["den"] = to_string(e.den, "a");
      jrow.push_back(std::move(cell));
    }
    table.push_back(std::move(jrow));
  }
  j["table"] = std::move(table);
  return j.dump();
}

std::string text_hp(const HPCertificate& c) {
  std::ostringstream os;
  os << "M: " << c.M << ", N: " << c.N << ", sigma: " << c.sigma << '\n';
  os << "series coefficients vanish through order sigma - 1\n";
  os << "leading coefficient at order sigma: " << to_string(c.lead) << '\n';
  for (std::size_t i = 0; i < c.p.size(); ++i)
    for (std::size_t h = 0; h < c.p[i].size(); ++h) {
      const AlphaRat& e = c.p[i][h];
      os << "p[" << i << "][" << h << "] = (" << to_string(e.num, "a")
         << ") / (" << to_string(e.den, "a") << ")\n";
    }
  return os.str();
}

std::string json_bench(const std::vector<BenchRow>& rows) {
  json arr = json::array();
  for (const BenchRow& r : rows) {
    json j;
    j["degree"] = r.degree;
    j["height_bits"] = r.height_bits;
    j["seed"] = std::to_string(r.seed);
    j["case_index"] = r.case_index;
    j["verdict"] = r.verdict;
    if (r.witness_prime != 0)
      j["witness_prime"] = std::to_string(r.witness_prime);
    j["time_ms"] = r.time_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace pcurv
