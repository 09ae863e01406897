// Copyright 2026 The qfourier Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace qfourier {

/// Bad user input: malformed series, out-of-range indices, broken invariants.
/// Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string &what)
        : std::runtime_error(what) {}
};

/// A requested scaling constant cannot be realized (total slot weight would
/// exceed 1). Maps to CLI exit code 3.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string &what)
        : std::runtime_error(what) {}
};

} // namespace qfourier
