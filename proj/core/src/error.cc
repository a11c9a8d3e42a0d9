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

#include "activita/error.h"

namespace activita {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyBases:
      return "EmptyBases";
    case ErrorCode::kUnequalCardinality:
      return "UnequalCardinality";
    case ErrorCode::kExchangeAxiomViolated:
      return "ExchangeAxiomViolated";
    case ErrorCode::kRankOutOfRange:
      return "RankOutOfRange";
    case ErrorCode::kNoEdges:
      return "NoEdges";
    case ErrorCode::kNotPrime:
      return "NotPrime";
    case ErrorCode::kElementOutOfRange:
      return "ElementOutOfRange";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kNotABasis:
      return "NotABasis";
    case ErrorCode::kElementInBasis:
      return "ElementInBasis";
    case ErrorCode::kNotIndependent:
      return "NotIndependent";
    case ErrorCode::kNotNbc:
      return "NotNBC";
    case ErrorCode::kNotACover:
      return "NotACover";
    case ErrorCode::kNotAPermutation:
      return "NotAPermutation";
    case ErrorCode::kNotPure:
      return "NotPure";
    case ErrorCode::kOrderNotExtension:
      return "OrderNotExtension";
    case ErrorCode::kComparablePair:
      return "ComparablePair";
    case ErrorCode::kDecompositionNotFound:
      return "DecompositionNotFound";
    case ErrorCode::kDecompositionNotUnique:
      return "DecompositionNotUnique";
    case ErrorCode::kEquivalenceMismatch:
      return "EquivalenceMismatch";
    case ErrorCode::kLatticeFailure:
      return "LatticeFailure";
    case ErrorCode::kWitnessNotFound:
      return "WitnessNotFound";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace activita
