/**************************************************************************
 * error.cpp
 *
 * Copyright 2026 The rsrepair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "rsrepair/error.hpp"

namespace rsrepair {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::WNotInImage: return "WNotInImage";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SingularRepairMatrix: return "SingularRepairMatrix";
    case ErrorCode::NonIntegerSum: return "NonIntegerSum";
    case ErrorCode::DegreeSharesCharacteristic: return "DegreeSharesCharacteristic";
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DependentBetas: return "DependentBetas";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NoSuitableTheta: return "NoSuitableTheta";
    case ErrorCode::ParamViolation: return "ParamViolation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace rsrepair
