// Copyright 2026 The secgame Authors
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

#ifndef SECGAME_ERRORS_H_
#define SECGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace secgame {

// Base class for every error raised by the library.
class SecgameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs with inconsistent dimensions, out-of-range indices or invalid
// probability vectors.
class MalformedInputError : public SecgameError {
 public:
  using SecgameError::SecgameError;
};

// An enumeration would exceed its configured budget.
class SizeLimitError : public SecgameError {
 public:
  using SecgameError::SecgameError;
};

// Scenario parameters violate the model's ordering assumptions.
class ParameterError : public SecgameError {
 public:
  using SecgameError::SecgameError;
};

}  // namespace secgame

#endif  // SECGAME_ERRORS_H_
