#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braket/eval.hpp"
#include "braket/term.hpp"
#include "braket/workspace.hpp"

namespace braket::check {

// Deterministic generator for randomized suites. All randomness derives from
// the seed; identical seeds give identical case streams on every platform.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : g_(seed) {}

  std::uint64_t bits() { return g_(); }
  bool coin() { return (g_() & 1) != 0; }
  double unit() { return static_cast<double>(g_() >> 11) * 0x1p-53; }
  double sym() { return unit() * 2.0 - 1.0; }
  int range(int lo, int hi);  // inclusive bounds

  Scalar scalar();
  Vector vector(std::size_t dim);

  enum class MarkMode { Unmarked, Explicit, Mixed };

  // Alternating character sequence; labels drawn from a small pool so
  // occurrences repeat.
  std::vector<DiracChar> chars(int len, bool start_ket, MarkMode mode);

  // Binds every label occurring in `chars` to a random vector.
  Workspace workspace_for(const std::vector<DiracChar>& chars,
                          std::size_t dim);

  // One random parenthesization.
  Term tree(const std::vector<DiracChar>& chars);

 private:
  Term tree_range(const std::vector<DiracChar>& chars, int lo, int hi);
  std::mt19937_64 g_;
};

struct Params {
  std::uint64_t seed = 0xD1AC;
  int cases = 200;        // randomized cases per suite
  int assoc_max_len = 6;  // all parenthesizations up to this length
  int robust_max_k = 3;   // exhaustive 2^k markings up to this k
  int nf_max_len = 10;
  int oracle_max_len = 6;
};

Params quick_params(std::uint64_t seed = 0xD1AC);
Params full_params(std::uint64_t seed = 0xD1AC);

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string counterexample;  // first failure: term, workspace, both values
  bool ok() const { return failed == 0; }
};

SuiteResult check_inner_product_axioms(const Params& p);
SuiteResult check_associativity(const Params& p);
SuiteResult check_robustness(const Params& p);
SuiteResult check_strategy_agreement(const Params& p);
SuiteResult check_normal_form(const Params& p);
SuiteResult check_oracle_equivalence(const Params& p);
SuiteResult check_kind_soundness(const Params& p);
SuiteResult check_compositionality(const Params& p);
SuiteResult check_outer_product_identity(const Params& p);

std::vector<SuiteResult> run_all(const Params& p);

// Shared by counterexample reports and the acceptance suite.
std::string describe_case(const Term& t, const Workspace& w,
                          const Value& got, const Value& want);

}  // namespace braket::check
