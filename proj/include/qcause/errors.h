// Copyright 2026 The qcause Authors
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


#ifndef QCAUSE_ERRORS_H_
#define QCAUSE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcause {

// Argument problems are reported with std::invalid_argument; a point outside
// the domain of a geometric map with std::domain_error.

/// A computed quantity broke an invariant that valid inputs guarantee
/// (complex residue of a probability, a bound violated, ...).
class ConsistencyError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up before finding an accepted draw.
class SamplingExhausted : public std::runtime_error {
   public:
    SamplingExhausted(const std::string &what, std::int64_t attempts, std::int64_t accepted)
        : std::runtime_error(what), attempts_(attempts), accepted_(accepted) {
    }
    std::int64_t attempts() const {
        return attempts_;
    }
    std::int64_t accepted() const {
        return accepted_;
    }
    double acceptance_rate() const {
        return attempts_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(attempts_);
    }

   private:
    std::int64_t attempts_;
    std::int64_t accepted_;
};

}  // namespace qcause

#endif  // QCAUSE_ERRORS_H_
