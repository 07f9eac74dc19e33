// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The eczcs Authors
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

#include <stdexcept>
#include <string>

namespace eczcs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, JSON, or fixture input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments whose shapes (length, alphabet, set sizes) do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A construction precondition does not hold.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The normal matrix of a least-squares problem is singular.
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

}  // namespace eczcs
