/*
 * Copyright 2026 The fssboost Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FSSBOOST_ERRORS_HPP_
#define FSSBOOST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fssboost {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misuse of a two-party protocol: reused correlated randomness, mismatched
// round structure between endpoints, shares from the wrong party.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// A real value that does not fit the fixed-point encoding.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Configuration rejected before any protocol runs (e.g. overflow budget).
class SetupError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fssboost

#endif  // FSSBOOST_ERRORS_HPP_
