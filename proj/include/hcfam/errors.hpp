/*
   Copyright 2026 The hcfam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcfam {

/* Every recoverable failure derives from DomainError; code() is the stable
   identifier the CLI emits in its structured error objects. */
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class DivisionByZero : public DomainError {
public:
  explicit DivisionByZero(const std::string& message = "division by zero")
      : DomainError("DivisionByZero", message) {}
};

/* Malformed textual/JSON input. The CLI maps this (and usage errors) to exit 2;
   all other DomainErrors exit 1. */
class ParseError : public DomainError {
public:
  explicit ParseError(const std::string& message)
      : DomainError("ParseError", message) {}
};

/* A bracket table violating one of the family axioms. axiom() is one of
   "shape", "antisymmetry", "weight-additivity", "h-compatibility", "jacobi";
   witness() lists the offending basis indices. */
class ValidationError : public DomainError {
public:
  ValidationError(std::string axiom, std::vector<unsigned> witness,
                  const std::string& message)
      : DomainError("ValidationError", message),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<unsigned>& witness() const noexcept { return witness_; }

private:
  std::string axiom_;
  std::vector<unsigned> witness_;
};

class FamilyMismatch : public DomainError {
public:
  explicit FamilyMismatch(const std::string& message = "elements belong to different families")
      : DomainError("FamilyMismatch", message) {}
};

class PuncturedAtZero : public DomainError {
public:
  explicit PuncturedAtZero(const std::string& message = "punctured family has no fiber at t = 0")
      : DomainError("PuncturedAtZero", message) {}
};

/* classify_extension rejection. The code doubles as the reason name. */
class NotExtensionError : public DomainError {
public:
  enum class Reason { WrongWeights, DegenerateBracket, NonMonomial };

  NotExtensionError(Reason reason, const std::string& message, std::string detail = {})
      : DomainError(reason_name(reason), message),
        reason_(reason),
        detail_(std::move(detail)) {}

  Reason reason() const noexcept { return reason_; }
  const std::string& detail() const noexcept { return detail_; }

  static const char* reason_name(Reason r) {
    switch (r) {
      case Reason::WrongWeights: return "WrongWeights";
      case Reason::DegenerateBracket: return "DegenerateBracket";
      case Reason::NonMonomial: return "NonMonomial";
    }
    return "NotExtension";
  }

private:
  Reason reason_;
  std::string detail_;
};

class ChainMismatch : public DomainError {
public:
  explicit ChainMismatch(const std::string& message = "morphisms do not chain")
      : DomainError("ChainMismatch", message) {}
};

class NotCanonical : public DomainError {
public:
  explicit NotCanonical(const std::string& message)
      : DomainError("NotCanonical", message) {}
};

class NoWitness : public DomainError {
public:
  explicit NoWitness(const std::string& message)
      : DomainError("NoWitness", message) {}
};

class DegreeBoundTooSmall : public DomainError {
public:
  explicit DegreeBoundTooSmall(const std::string& message)
      : DomainError("DegreeBoundTooSmall", message) {}
};

}  // namespace hcfam
