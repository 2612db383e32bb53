// Copyright 2026 The kuni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kuni/error.h"

namespace kuni {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeP:
            return "NonPrimeP";
        case ErrorKind::ReducibleModulus:
            return "ReducibleModulus";
        case ErrorKind::UnsupportedSize:
            return "UnsupportedSize";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::SpecMismatch:
            return "SpecMismatch";
        case ErrorKind::NotSquare:
            return "NotSquare";
        case ErrorKind::RankDeficient:
            return "RankDeficient";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::RankDrop:
            return "RankDrop";
        case ErrorKind::DegenerateCoordinate:
            return "DegenerateCoordinate";
        case ErrorKind::OutOfRange:
            return "OutOfRange";
        case ErrorKind::CertificationFailed:
            return "CertificationFailed";
        case ErrorKind::CertificationMissing:
            return "CertificationMissing";
        case ErrorKind::BadKernelDimension:
            return "BadKernelDimension";
        case ErrorKind::OrderMismatch:
            return "OrderMismatch";
        case ErrorKind::LayoutMismatch:
            return "LayoutMismatch";
        case ErrorKind::SizeMismatch:
            return "SizeMismatch";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::UnknownName:
            return "UnknownName";
        case ErrorKind::SupportBelowRankBound:
            return "SupportBelowRankBound";
        case ErrorKind::NonPrimeQ:
            return "NonPrimeQ";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace kuni
