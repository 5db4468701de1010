// Copyright 2021 Google LLC
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

#ifndef DSSB_ERRORS_HPP
#define DSSB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dssb {

/// A normalization constant vanished (e.g. a Koma-Tasaki weight Z(k) or w(O^2)).
class NormalizationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Adaptive integration could not proceed; carries the last time reached.
class IntegrationError : public std::runtime_error {
   public:
    IntegrationError(const std::string& what, double last_time)
        : std::runtime_error(what + " (reached t=" + std::to_string(last_time) + ")"),
          last_time_(last_time) {}
    double last_time() const { return last_time_; }

   private:
    double last_time_;
};

/// Invalid experiment configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace dssb

#endif
