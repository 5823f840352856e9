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

#include "clickcounter/probability.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace clickcounter {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error("probability must lie in [0, 1]");
  }
}

Probability::Probability(const ExactRational& value) : exact_(value) {
  if (value.sign() < 0 || value > ExactRational(1)) {
    throw std::domain_error("probability must lie in [0, 1], got " + value.to_string());
  }
  value_ = value.to_double();
}

Probability Probability::parse(std::string_view text) { return Probability(ExactRational::parse(text)); }

ExactRational Probability::exact_or_dyadic() const {
  return exact_ ? *exact_ : ExactRational::from_double(value_);
}

std::string Probability::to_string() const {
  if (exact_) return exact_->to_string();
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

Probability Probability::complement() const {
  if (exact_) return Probability(ExactRational(1) - *exact_);
  return Probability(1.0 - value_);
}

Probability Probability::times(const Probability& other) const {
  if (exact_ && other.exact_) return Probability(*exact_ * *other.exact_);
  return Probability(value_ * other.value_);
}

Probability Probability::pow(std::uint64_t exponent) const {
  if (exact_) return Probability(exact_->pow(exponent));
  return Probability(std::pow(value_, static_cast<double>(exponent)));
}

}  // namespace clickcounter
