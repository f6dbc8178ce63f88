// Copyright 2026 The demoivre Authors
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

#ifndef DEMOIVRE_ERROR_HPP_
#define DEMOIVRE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace demoivre {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: bad parameters, violated preconditions, malformed text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numeric computation could not reach the accuracy needed to certify its
// result at the working precision (after any automatic retries).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace demoivre

#endif  // DEMOIVRE_ERROR_HPP_
