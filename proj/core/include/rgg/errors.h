// Copyright 2026 The Authors.
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

#ifndef RGG_ERRORS_H_
#define RGG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rgg {

// All library failures derive from Error. Negative outcomes (a profile that
// is not an equilibrium, a cost function that violates a functional
// equation) are results, not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed object: dimension mismatch, empty strategy space, bad indices.
class StructuralError : public Error {
  using Error::Error;
};

// A value outside the set an operation is defined on (unplayable strategy,
// fractional load for an integer-only table, non-exchange pair).
class DomainError : public Error {
  using Error::Error;
};

// Load exceeds the declared table bound.
class RangeError : public Error {
  using Error::Error;
};

// Wrong call shape, e.g. a missing player index for player-specific costs.
class UsageError : public Error {
  using Error::Error;
};

// Enumeration cap or profile budget exceeded.
class CapacityError : public Error {
  using Error::Error;
};

// Precondition of a formula not met (asymmetric matrix, weighted players).
class PreconditionError : public Error {
  using Error::Error;
};

// Structured models that cannot be combined (different exponents).
class IncompatibleError : public Error {
  using Error::Error;
};

// Requested conversion is not available for this model.
class UnsupportedError : public Error {
  using Error::Error;
};

// An internal invariant that a theorem guarantees did not hold. Seeing one of
// these means a bug or an inconsistent input such as a wrong nu table.
class InternalError : public Error {
  using Error::Error;
};

}  // namespace rgg

#endif  // RGG_ERRORS_H_
