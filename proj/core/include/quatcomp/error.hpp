// Copyright 2026 The Quatcomp Authors. All Rights Reserved.
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

#ifndef QUATCOMP_ERROR_HPP_
#define QUATCOMP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace quatcomp {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the operation's domain (negative input, bad rank).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed or produced NaN/Inf.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Reading or writing an external file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatcomp

#endif  // QUATCOMP_ERROR_HPP_
