// Copyright 2026 The simgame Authors
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
#ifndef SIMGAME_ERRORS_HPP_
#define SIMGAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace simgame {

// Input errors map to exit code 1, computation errors to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg, int exit_code)
      : std::runtime_error(msg), code_(std::move(code)), exit_code_(exit_code) {}
  const std::string& code() const { return code_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("parse", msg, 1) {}
};

class GameError : public Error {
 public:
  explicit GameError(const std::string& msg) : Error("invalid_game", msg, 1) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& msg) : Error("cap_exceeded", msg, 2) {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& msg)
      : Error("verification_failed", msg, 2) {}
};

class NotGeneric : public Error {
 public:
  explicit NotGeneric(const std::string& msg) : Error("not_generic", msg, 2) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg)
      : Error("precondition", msg, 2) {}
};

}  // namespace simgame

#endif  // SIMGAME_ERRORS_HPP_
