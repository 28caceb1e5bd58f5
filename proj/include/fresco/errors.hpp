// Copyright 2026 The fresco authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace fresco {

// Malformed or inconsistent user input: unknown kinds, port indices outside
// the network, mismatched photon/detector counts, bad JSON documents.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a hard combinatorial guard (factorial or enumeration size).
class SizeLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to converge.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fresco
