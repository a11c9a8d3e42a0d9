// Copyright 2026 The Activita Authors.
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

#ifndef ACTIVITA_ERROR_H_
#define ACTIVITA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace activita {

enum class ErrorCode {
  // Matroid construction.
  kEmptyBases,
  kUnequalCardinality,
  kExchangeAxiomViolated,
  kRankOutOfRange,
  kNoEdges,
  kNotPrime,
  kElementOutOfRange,
  kInvalidArgument,
  // Argument checks.
  kNotABasis,
  kElementInBasis,
  kNotIndependent,
  kNotNbc,
  kNotACover,
  kNotAPermutation,
  kNotPure,
  kOrderNotExtension,
  kComparablePair,
  // Internal consistency; raising one of these means a bug or a
  // counterexample to a theorem the library relies on.
  kDecompositionNotFound,
  kDecompositionNotUnique,
  kEquivalenceMismatch,
  kLatticeFailure,
  kWitnessNotFound,
  // Input parsing.
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace activita

#endif  // ACTIVITA_ERROR_H_
