// Copyright 2026 The clickcounter Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace clickcounter {

/// A requested evaluation cannot be performed with the parameters given,
/// e.g. exact mode on a model that carries no rational parameters.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle refused a problem larger than its work bound.
class WorkBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace clickcounter
