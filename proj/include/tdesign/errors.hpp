// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TDESIGN_ERRORS_HPP_
#define TDESIGN_ERRORS_HPP_

#include <stdexcept>

namespace tdesign {

// Invalid argument values: bad dimensions, malformed weight vectors,
// out-of-domain parameters, malformed grids.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested object exceeds a configured size cap, an integer result does
// not fit the return type, or an I/O resource failed.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration input: unknown keys, missing fields, wrong types.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A statistical fit could not be carried out on the given data.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tdesign

#endif  // TDESIGN_ERRORS_HPP_
