#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"

namespace hhv {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepRanges {
  Range a{0.5, 2.0};
  Range b{1.0, 4.0};
  std::optional<Range> b_minus_a;  // when set, b = a + sample and `b` is unused
  Range m{1.0, 1.0};
  Range alpha{1.0, 1.0};
  Range p{2.0, 2.0};
  Range lambda{0.0, 1.0};
  Range r{2.0, 2.0};
};

struct SweepSpec {
  std::string theorem_id;
  std::vector<std::string> fn_set;  // catalog specs; unused by prop1..prop6
  SweepRanges ranges;
  std::vector<int> n_set{2};
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  bool check_hypothesis = true;
  Variant variant = Variant::Literal;
  int hypothesis_grid = 32;
  double quad_tol = kDefaultQuadTol;
};

/// Parses a sweep config document. Keys mirror SweepSpec field names;
/// unknown keys, wrong types and invalid ranges raise ConfigError.
SweepSpec parse_sweep_spec(std::string_view json_text);

/// Validates a spec built in code; same rules as parse_sweep_spec.
void validate(const SweepSpec& spec);

struct SamplePoint {
  std::int64_t index = 0;
  std::string fn;
  BoundParams params;
  int attempts = 1;  // 1 + rejected draws
};

inline constexpr int kMaxRejections = 10000;

/// Deterministic point for (spec.seed, index). The first draw comes from a
/// seed-scrambled Halton sequence (stratified in every dimension and
/// independent of spec.samples); rejected draws are replaced by hashed
/// uniforms until the standing assumption holds (0 < a < m b for the
/// m-scaled theorems, a < b otherwise). Throws ConfigError after
/// kMaxRejections draws.
SamplePoint sample_params(const SweepSpec& spec, std::int64_t index);

struct ViolationRecord {
  std::int64_t index = 0;
  std::uint64_t seed = 0;
  BoundOutcome outcome;
};

struct SweepRow {
  std::int64_t index = 0;
  Status status = Status::Error;
  std::optional<BoundOutcome> outcome;  // empty when status == Error
  std::string fn;
  BoundParams params;
  std::string error;
};

struct MarginRecord {
  std::int64_t index = 0;
  BoundOutcome outcome;
  double margin = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // index order
  std::vector<ViolationRecord> violations;
  std::optional<MarginRecord> min_margin;  // hypothesis-passing row of least margin
  std::int64_t checked = 0;
  std::int64_t errors = 0;
};

/// Evaluates every sample, in parallel across `jobs` threads. Results are
/// merged in index order, so output does not depend on jobs. A violation
/// found with the coarse in-sweep hypothesis grid is re-checked at grid 64
/// before it is recorded.
SweepResult sweep(const SweepSpec& spec, int jobs = 1);

/// Smallest margin >= -tol among hypothesis-passing rows of a finished sweep.
std::optional<MarginRecord> tightest(const SweepResult& result, double tol);

/// Smallest margin >= -spec.tol among hypothesis-passing samples.
/// Throws EmptySweep when no sample qualifies.
MarginRecord min_margin(std::string_view theorem_id, const SweepSpec& spec, int jobs = 1);

}  // namespace hhv
