// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ris {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A truncated series failed to reach the requested accuracy.
class AccuracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Fewer than the required number of outage events were observed.
class RareEventGuardError : public std::runtime_error {
  public:
    RareEventGuardError(std::size_t trials, std::size_t failures, std::size_t required)
        : std::runtime_error("rare-event guard: " + std::to_string(failures) + " failures in " +
                             std::to_string(trials) + " trials, need at least " +
                             std::to_string(required)),
          trials_(trials),
          failures_(failures) {}

    std::size_t trials() const noexcept { return trials_; }
    std::size_t failures() const noexcept { return failures_; }

  private:
    std::size_t trials_;
    std::size_t failures_;
};

// Not enough usable points for a regression.
class FitError : public std::runtime_error {
  public:
    FitError(const std::string& what, std::size_t qualifying)
        : std::runtime_error(what + " (qualifying points: " + std::to_string(qualifying) + ")"),
          qualifying_(qualifying) {}

    std::size_t qualifying() const noexcept { return qualifying_; }

  private:
    std::size_t qualifying_;
};

// Every point of a sweep was censored.
class EmptyResultError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace ris
