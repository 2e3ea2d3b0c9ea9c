/*
decor-uniform

Copyright 2026 The decor-uniform Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decor_uniform
{

/** @brief Failure categories raised by the library */
enum class ErrorKind {
    // mesh
    InvalidInput,
    BoundaryEdge,
    NonManifold,
    InvalidFacePair,
    NonOrientable,
    Disconnected,
    FlipForbidden,
    // geometry / metric
    DegenerateTriangle,
    ImaginaryRadicalCircle,
    NonConvexQuad,
    NonPositiveSquaredLength,
    TriangleInequalityViolated,
    FactorOverflow,
    // delaunay
    FlipLimitExceeded,
    InternalInvariantViolation,
    StepUnderflow,
    // solver
    CaseUnsupported,
    MaxItersExceeded,
    // io
    ParseError,
    SchemaError,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::BoundaryEdge: return "BoundaryEdge";
        case ErrorKind::NonManifold: return "NonManifold";
        case ErrorKind::InvalidFacePair: return "InvalidFacePair";
        case ErrorKind::NonOrientable: return "NonOrientable";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::FlipForbidden: return "FlipForbidden";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::ImaginaryRadicalCircle: return "ImaginaryRadicalCircle";
        case ErrorKind::NonConvexQuad: return "NonConvexQuad";
        case ErrorKind::NonPositiveSquaredLength: return "NonPositiveSquaredLength";
        case ErrorKind::TriangleInequalityViolated: return "TriangleInequalityViolated";
        case ErrorKind::FactorOverflow: return "FactorOverflow";
        case ErrorKind::FlipLimitExceeded: return "FlipLimitExceeded";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::StepUnderflow: return "StepUnderflow";
        case ErrorKind::CaseUnsupported: return "CaseUnsupported";
        case ErrorKind::MaxItersExceeded: return "MaxItersExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

/** @brief Exception carrying an ErrorKind and a message */
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_{kind}
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace decor_uniform
