// Copyright 2026 The ringpoa Authors
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

#ifndef RINGPOA_RATIONAL_H_
#define RINGPOA_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ringpoa {

// Compare only Rational against Rational. With C++20 rewritten comparison
// operators, Boost 1.74 mixed integer comparisons recurse forever.
using Rational = boost::rational<std::int64_t>;

// Always "p/q", including integers ("2/1").
std::string ToString(const Rational& value);

inline double ToDouble(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace ringpoa

#endif  // RINGPOA_RATIONAL_H_
