// Copyright 2026 The strongprops Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STRONGPROPS_ERRORS_HPP
#define STRONGPROPS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongprops {

// Root of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: non-square, non-finite, size mismatch,
// asymmetric where symmetry is required.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The matrix is not in the class S(G) / Q(P) it was declared to belong to.
class PatternMismatch : public InputError {
 public:
  using InputError::InputError;
};

// A dense kernel failed to converge (Schur / SVD iteration).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Derivative of a perturbation map at zero is not surjective, i.e. the base
// matrix lacks the matching strong property.
class SurjectivityFailure : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// A realized matrix left the required graph / sign-pattern class.
class PatternViolation : public Error {
 public:
  using Error::Error;
};

// The strong property did not survive to the realized matrix.
class PropertyLost : public Error {
 public:
  using Error::Error;
};

class NotARefinement : public Error {
 public:
  using Error::Error;
};

// Inertia / rank / q targets that cannot be reached by northeast or
// splitting steps from the base.
class UnreachableTarget : public Error {
 public:
  using Error::Error;
};

class NotASuperpattern : public Error {
 public:
  using Error::Error;
};

// Certificate hypotheses (nilpotency, class membership, nSSP) failed.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace strongprops

#endif  // STRONGPROPS_ERRORS_HPP
