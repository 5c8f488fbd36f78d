// Copyright 2026 The GASM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GASM_MATCHERS_HPP_
#define GASM_MATCHERS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "gasm/baselines.hpp"
#include "gasm/engine.hpp"

namespace gasm {

enum class Algorithm { kGasm, kZager, kTwoOpt };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kGasm: return "gasm";
    case Algorithm::kZager: return "zager";
    case Algorithm::kTwoOpt: return "2opt";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "gasm") return Algorithm::kGasm;
  if (s == "zager") return Algorithm::kZager;
  if (s == "2opt") return Algorithm::kTwoOpt;
  throw Error("unknown algorithm '" + std::string(s) + "'");
}

struct MatchOutcome {
  Matching matching;
  bool complemented = false;
  double f_x = 1.0;
};

/// Runs one algorithm with a given seed. `gasm` supplies eta, complement
/// policy and iteration overrides; its seed is replaced by `seed`.
inline MatchOutcome run_matcher(Algorithm algo, const Graph& a, const Graph& b,
                                std::uint64_t seed, GasmConfig gasm = {}) {
  MatchOutcome out;
  switch (algo) {
    case Algorithm::kGasm: {
      gasm.seed = seed;
      GasmResult r = run_gasm(a, b, gasm);
      out.matching = std::move(r.matching);
      out.complemented = r.diagnostics.complemented;
      out.f_x = r.diagnostics.f_x;
      break;
    }
    case Algorithm::kZager: {
      ZagerConfig z;
      z.max_iterations = gasm.max_iterations;
      out.matching = run_zager(a, b, z).matching;
      out.matching.seed = seed;
      break;
    }
    case Algorithm::kTwoOpt:
      out.matching = run_two_opt(a, b, seed);
      break;
  }
  return out;
}

}  // namespace gasm

#endif  // GASM_MATCHERS_HPP_
