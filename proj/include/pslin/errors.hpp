// Copyright 2026 The pslin Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pslin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// An enclosure could not be narrowed enough to decide a floor, an ordering
// or a comparison before the working precision reached its cap.
class PrecisionOverflow : public Error {
 public:
  PrecisionOverflow(const std::string& what, long precision_cap,
                    std::size_t index = 0)
      : Error(what), precision_cap_(precision_cap), index_(index) {}

  long precision_cap() const { return precision_cap_; }
  // Progress marker (e.g. convergent index reached); 0 when not applicable.
  std::size_t index() const { return index_; }

 private:
  long precision_cap_;
  std::size_t index_;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

class NotSolvableInN : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pslin
