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

// Picard lattice of the Hirzebruch surface F_n = P(O + O(-n)), generated by
// the directrix E (E.E = -n) and a fiber F (E.F = 1, F.F = 0), and the
// dimension count for the hyperelliptic locus built on it.

#ifndef TORELLI_HIRZEBRUCH_H_
#define TORELLI_HIRZEBRUCH_H_

#include <cstdint>

namespace torelli::hirzebruch {

// a E + b F on F_n.
struct DivisorClass {
  int n;
  std::int64_t a;
  std::int64_t b;

  DivisorClass operator+(const DivisorClass& o) const;
  bool operator==(const DivisorClass& o) const = default;
};

DivisorClass directrix(int n);
DivisorClass fiber(int n);

// Throws SurfaceMismatch.
std::int64_t intersect(const DivisorClass& u, const DivisorClass& v);

// K = -2E - (n+2)F.
DivisorClass canonical_class(int n);

// g with 2g - 2 = (K + C).C. Throws OddAdjunction.
std::int64_t adjunction_genus(const DivisorClass& c);

// 2E + (2g+2)F on F_{g+1}.
DivisorClass hyperelliptic_class(int g);

struct LinearSystemDim {
  std::int64_t h0;        // sections on the surface, 3g + 6
  std::int64_t proj_dim;  // 3g + 5
};

// Replays the Riemann-Roch count for |2E + (2g+2)F|:
// deg O_C(C) = C.C, h0(O_C(C)) = deg - g + 1, h0 on F_{g+1} one more.
LinearSystemDim linear_system_dim(int g);

// Aut(F_n) has dimension n + 5.
std::int64_t aut_dim(int n);

// (3g + 5) - ((g + 1) + 5) = 2g - 1.
std::int64_t hg_dimension(int g);

}  // namespace torelli::hirzebruch

#endif  // TORELLI_HIRZEBRUCH_H_
