/*
 * Copyright 2026 The covgame Authors
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

namespace covgame {

enum class ErrorKind {
    InvalidModel,
    MOutOfRange,
    ApCapExceeded,
    NotDeterministic,
    NotRecurrent,
    NoEndComponent,
    BudgetExceeded,
    EmptyEdgeSet,
    InvalidFormula,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::MOutOfRange: return "MOutOfRange";
    case ErrorKind::ApCapExceeded: return "ApCapExceeded";
    case ErrorKind::NotDeterministic: return "NotDeterministic";
    case ErrorKind::NotRecurrent: return "NotRecurrent";
    case ErrorKind::NoEndComponent: return "NoEndComponent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::InvalidFormula: return "InvalidFormula";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace covgame
