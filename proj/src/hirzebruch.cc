// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torelli/hirzebruch.h"

#include <string>

#include "torelli/errors.h"

namespace torelli::hirzebruch {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (n != o.n) {
    throw Error(ErrorCode::kSurfaceMismatch,
                "F_" + std::to_string(n) + " vs F_" + std::to_string(o.n));
  }
  return {n, a + o.a, b + o.b};
}

DivisorClass directrix(int n) { return {n, 1, 0}; }
DivisorClass fiber(int n) { return {n, 0, 1}; }

std::int64_t intersect(const DivisorClass& u, const DivisorClass& v) {
  if (u.n != v.n) {
    throw Error(ErrorCode::kSurfaceMismatch,
                "F_" + std::to_string(u.n) + " vs F_" + std::to_string(v.n));
  }
  return -static_cast<std::int64_t>(u.n) * u.a * v.a + u.a * v.b + v.a * u.b;
}

DivisorClass canonical_class(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "surface index must be >= 1");
  return {n, -2, -(static_cast<std::int64_t>(n) + 2)};
}

std::int64_t adjunction_genus(const DivisorClass& c) {
  const std::int64_t twice = intersect(canonical_class(c.n) + c, c);
  if (twice % 2 != 0) {
    throw Error(ErrorCode::kOddAdjunction,
                "(K + C).C = " + std::to_string(twice) + " is odd");
  }
  return (twice + 2) / 2;
}

DivisorClass hyperelliptic_class(int g) {
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  return {g + 1, 2, 2 * static_cast<std::int64_t>(g) + 2};
}

LinearSystemDim linear_system_dim(int g) {
  if (g < 0) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 0");
  // Self-intersection of 2E + (2g+2)F on F_{g+1}: -4(g+1) + 4(2g+2).
  const DivisorClass c{g + 1, 2, 2 * static_cast<std::int64_t>(g) + 2};
  const std::int64_t degree = intersect(c, c);
  const std::int64_t h0_curve = degree - g + 1;
  // 0 -> O -> O(C) -> O_C(C) -> 0 with h1(O) = 0 on a rational surface.
  const std::int64_t h0_surface = h0_curve + 1;
  return {h0_surface, h0_surface - 1};
}

std::int64_t aut_dim(int n) { return static_cast<std::int64_t>(n) + 5; }

std::int64_t hg_dimension(int g) {
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "genus must be >= 2");
  return linear_system_dim(g).proj_dim - aut_dim(g + 1);
}

}  // namespace torelli::hirzebruch
