/*
 * Copyright 2026 The arrows authors
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
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrows {

enum class ErrorCode {
    InvalidParameter,
    InvalidGraph,
    InvalidState,
    Occupied,
    IllegalMove,
    ResourceLimit,
    Parse,
};

// Why a move was rejected; only meaningful for IllegalMove.
enum class MoveViolation {
    None,
    CreatesSink,
    CreatesSource,
    LeafViolation,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidGraph: return "invalid-graph";
    case ErrorCode::InvalidState: return "invalid-state";
    case ErrorCode::Occupied: return "occupied";
    case ErrorCode::IllegalMove: return "illegal-move";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::Parse: return "parse-error";
    }
    return "unknown";
}

inline std::string_view to_string(MoveViolation v)
{
    switch (v) {
    case MoveViolation::None: return "none";
    case MoveViolation::CreatesSink: return "creates-sink";
    case MoveViolation::CreatesSource: return "creates-source";
    case MoveViolation::LeafViolation: return "leaf-violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          MoveViolation violation = MoveViolation::None)
        : std::runtime_error(what), code_(code), violation_(violation)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    MoveViolation violation() const noexcept { return violation_; }

private:
    ErrorCode code_;
    MoveViolation violation_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace arrows
