#include "falsify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include <json.hpp>

#include "errors.hpp"
#include "means.hpp"

namespace hhv {
namespace {

using nlohmann::json;

enum Dim { kFn, kN, kA, kB, kM, kAlpha, kP, kLambda, kR, kDims };

constexpr std::array<int, kDims> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Number of base-b digits needed to resolve 53 bits.
int digits_for(int base) { return static_cast<int>(std::ceil(53.0 / std::log2(base))); }

// Halton radical inverse with an independent seeded digit permutation per
// (dimension, digit position). Permuting digits keeps every b^k-prefix
// stratified.
class ScrambledHalton {
 public:
  explicit ScrambledHalton(std::uint64_t seed) {
    for (int d = 0; d < kDims; ++d) {
      const int base = kBases[d];
      const int ndigits = digits_for(base);
      perms_[d].resize(ndigits);
      for (int j = 0; j < ndigits; ++j) {
        std::vector<int>& perm = perms_[d][j];
        perm.resize(base);
        for (int k = 0; k < base; ++k) perm[k] = k;
        std::uint64_t state = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(d) * 1000 + j));
        for (int k = base - 1; k > 0; --k) {
          state = splitmix64(state);
          std::swap(perm[k], perm[state % static_cast<std::uint64_t>(k + 1)]);
        }
      }
    }
  }

  double operator()(int dim, std::int64_t index) const {
    const int base = kBases[dim];
    const auto& perms = perms_[dim];
    double scale = 1.0 / base;
    double out = 0.0;
    std::uint64_t rest = static_cast<std::uint64_t>(index);
    for (const auto& perm : perms) {
      out += perm[rest % base] * scale;
      rest /= base;
      scale /= base;
    }
    return std::min(out, std::nextafter(1.0, 0.0));
  }

 private:
  std::array<std::vector<std::vector<int>>, kDims> perms_;
};

double hashed_uniform(std::uint64_t seed, std::int64_t index, int attempt, int dim) {
  std::uint64_t h = splitmix64(seed ^ 0x5bd1e995ULL);
  h = splitmix64(h ^ static_cast<std::uint64_t>(index));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(attempt) << 8 | static_cast<std::uint64_t>(dim)));
  return to_unit(h);
}

double lerp(Range r, double u) { return r.lo + u * (r.hi - r.lo); }

bool m_scaled(std::string_view id) {
  return id == "thm1.3" || id == "thm3.1" || id == "thm3.2" || id == "thm3.3";
}

bool is_prop(std::string_view id) { return id.substr(0, 4) == "prop"; }

void check_range(const Range& r, const char* name) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
    throw ConfigError(std::string("range '") + name + "' must be finite with lo <= hi");
  }
}

double json_number(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_number(v.get<std::string>());
  throw ConfigError("'" + key + "' must be a number");
}

Range json_range(const json& v, const std::string& key) {
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError("range '" + key + "' must be [lo, hi]");
    return Range{json_number(v[0], key), json_number(v[1], key)};
  }
  const double x = json_number(v, key);
  return Range{x, x};
}

SweepRow evaluate_row(const SweepSpec& spec, std::int64_t index) {
  SweepRow row;
  row.index = index;
  try {
    SamplePoint point = sample_params(spec, index);
    row.fn = point.fn;
    row.params = point.params;
    const TestFunction fn = is_prop(spec.theorem_id) ? TestFunction::exponential()
                                                     : TestFunction::parse(point.fn);
    BoundOutcome outcome = evaluate_bound(spec.theorem_id, fn, point.params, spec.check_hypothesis);
    if (spec.check_hypothesis && outcome.hypothesis_ok &&
        outcome.hypothesis_status == HypothesisStatus::Checked && outcome.margin < -spec.tol &&
        point.params.hyp_grid < kDefaultGrid) {
      row.params.hyp_grid = kDefaultGrid;
      outcome = evaluate_bound(spec.theorem_id, fn, row.params, true);
    }
    row.fn = outcome.fn;
    row.status = classify(outcome, spec.tol);
    row.outcome = std::move(outcome);
  } catch (const Error& e) {
    row.status = Status::Error;
    row.error = e.what();
  }
  return row;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (!is_theorem_id(spec.theorem_id)) {
    throw ConfigError("unknown theorem_id '" + spec.theorem_id + "'");
  }
  if (spec.samples < 1) throw ConfigError("samples must be >= 1");
  if (!(spec.tol >= 0.0)) throw ConfigError("tol must be non-negative");
  if (!(spec.quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
  if (spec.hypothesis_grid < 8) throw ConfigError("hypothesis_grid must be >= 8");
  if (spec.n_set.empty()) throw ConfigError("n_set must not be empty");
  for (int n : spec.n_set) {
    if (n < 1) throw ConfigError("n_set entries must be >= 1");
  }
  if (!is_prop(spec.theorem_id)) {
    if (spec.fn_set.empty()) throw ConfigError("fn_set must not be empty");
    for (const auto& f : spec.fn_set) TestFunction::parse(f);
  }
  const SweepRanges& r = spec.ranges;
  check_range(r.a, "a");
  check_range(r.b, "b");
  if (r.b_minus_a) check_range(*r.b_minus_a, "b_minus_a");
  check_range(r.m, "m");
  check_range(r.alpha, "alpha");
  check_range(r.p, "p");
  check_range(r.lambda, "lambda");
  check_range(r.r, "r");
}

SweepSpec parse_sweep_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("sweep config must be a JSON object");

  SweepSpec spec;
  static const std::set<std::string> range_keys = {"a", "b", "b_minus_a", "m", "alpha", "p", "lambda", "r"};
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "theorem_id") {
        spec.theorem_id = value.get<std::string>();
      } else if (key == "fn_set") {
        spec.fn_set = value.get<std::vector<std::string>>();
      } else if (key == "n_set") {
        spec.n_set = value.get<std::vector<int>>();
      } else if (key == "samples") {
        spec.samples = value.get<std::int64_t>();
      } else if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else if (key == "tol") {
        spec.tol = json_number(value, key);
      } else if (key == "check_hypothesis") {
        spec.check_hypothesis = value.get<bool>();
      } else if (key == "variant") {
        spec.variant = parse_variant(value.get<std::string>());
      } else if (key == "hypothesis_grid") {
        spec.hypothesis_grid = value.get<int>();
      } else if (key == "quad_tol") {
        spec.quad_tol = json_number(value, key);
      } else if (key == "ranges") {
        if (!value.is_object()) throw ConfigError("'ranges' must be an object");
        for (const auto& [rkey, rvalue] : value.items()) {
          if (!range_keys.count(rkey)) throw ConfigError("unknown range '" + rkey + "'");
          const Range range = json_range(rvalue, rkey);
          SweepRanges& r = spec.ranges;
          if (rkey == "a") r.a = range;
          else if (rkey == "b") r.b = range;
          else if (rkey == "b_minus_a") r.b_minus_a = range;
          else if (rkey == "m") r.m = range;
          else if (rkey == "alpha") r.alpha = range;
          else if (rkey == "p") r.p = range;
          else if (rkey == "lambda") r.lambda = range;
          else r.r = range;
        }
      } else {
        throw ConfigError("unknown sweep config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("sweep config has a wrong type: ") + e.what());
  }
  if (spec.theorem_id.empty()) throw ConfigError("sweep config needs 'theorem_id'");
  validate(spec);
  return spec;
}

SamplePoint sample_params(const SweepSpec& spec, std::int64_t index) {
  const ScrambledHalton halton(spec.seed);
  const SweepRanges& r = spec.ranges;
  const std::string& id = spec.theorem_id;

  for (int attempt = 0; attempt <= kMaxRejections; ++attempt) {
    auto u = [&](int dim) {
      return attempt == 0 ? halton(dim, index) : hashed_uniform(spec.seed, index, attempt, dim);
    };
    SamplePoint point;
    point.index = index;
    point.attempts = attempt + 1;
    if (!spec.fn_set.empty()) {
      const auto k = static_cast<std::size_t>(u(kFn) * spec.fn_set.size());
      point.fn = spec.fn_set[std::min(k, spec.fn_set.size() - 1)];
    }
    const auto nk = static_cast<std::size_t>(u(kN) * spec.n_set.size());
    BoundParams& params = point.params;
    params.n = spec.n_set[std::min(nk, spec.n_set.size() - 1)];
    params.a = lerp(r.a, u(kA));
    params.b = r.b_minus_a ? params.a + lerp(*r.b_minus_a, u(kB)) : lerp(r.b, u(kB));
    params.m = lerp(r.m, u(kM));
    params.alpha = lerp(r.alpha, u(kAlpha));
    params.p = lerp(r.p, u(kP));
    if (id == "thm1.2") params.lambda = lerp(r.lambda, u(kLambda));
    if (is_prop(id)) params.r = lerp(r.r, u(kR));
    params.variant = spec.variant;
    params.quad_tol = spec.quad_tol;
    params.hyp_grid = spec.hypothesis_grid;

    const bool admissible = m_scaled(id) ? (params.a > 0.0 && params.a < params.m * params.b)
                                         : params.a < params.b;
    if (admissible) return point;
  }
  throw ConfigError("no admissible parameter point after " + std::to_string(kMaxRejections) +
                    " rejections (check the a, b, m ranges)");
}

SweepResult sweep(const SweepSpec& spec, int jobs) {
  validate(spec);
  const std::int64_t total = spec.samples;
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));

  const int workers = static_cast<int>(std::clamp<std::int64_t>(jobs, 1, total));
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (std::int64_t i = next++; i < total; i = next++) {
      rows[static_cast<std::size_t>(i)] = evaluate_row(spec, i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SweepResult out;
  for (const SweepRow& row : rows) {
    if (row.status == Status::Error) {
      ++out.errors;
      continue;
    }
    ++out.checked;
    const BoundOutcome& o = *row.outcome;
    if (row.status == Status::Violated) out.violations.push_back({row.index, spec.seed, o});
    if (o.hypothesis_ok && (!out.min_margin || o.margin < out.min_margin->margin)) {
      out.min_margin = MarginRecord{row.index, o, o.margin};
    }
  }
  out.rows = std::move(rows);
  return out;
}

std::optional<MarginRecord> tightest(const SweepResult& result, double tol) {
  std::optional<MarginRecord> best;
  for (const SweepRow& row : result.rows) {
    if (row.status == Status::Error || !row.outcome->hypothesis_ok) continue;
    const double margin = row.outcome->margin;
    if (margin < -tol) continue;
    if (!best || margin < best->margin) best = MarginRecord{row.index, *row.outcome, margin};
  }
  return best;
}

MarginRecord min_margin(std::string_view theorem_id, const SweepSpec& spec, int jobs) {
  SweepSpec local = spec;
  local.theorem_id = std::string(theorem_id);
  auto best = tightest(sweep(local, jobs), local.tol);
  if (!best) throw EmptySweep("no hypothesis-passing sample in the sweep");
  return *best;
}

}  // namespace hhv
