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

// Text grammars shared by the CLI and test fixtures.
//
//   field:  "Q" | "GF(p)" | "GF(p^k)"
//   poly:   "x^5 + 3x + 1", "(t+1)*x^2 + t", "1/2*x - 3"   (t is the
//           generator of an extension field)
//   curve:  "char=0;f=..." | "char=7;f=..." |
//           "char=2^3;alpha0=...;terms=(a1:alpha1),(a2:alpha2),..."
//
// Failures throw ParseError carrying the byte offset into the input.

#ifndef TORELLI_PARSE_H_
#define TORELLI_PARSE_H_

#include <string_view>

#include "torelli/curves.h"
#include "torelli/field.h"
#include "torelli/poly.h"

namespace torelli {

Field parse_field_spec(std::string_view s);
Poly parse_poly(const Field& field, std::string_view s);
FieldElem parse_element(const Field& field, std::string_view s);
// "0" -> Q, "7" -> GF(7), "2^3" -> GF(2^3).
Field parse_char_token(std::string_view s);
// Validation errors (WrongDegree, NotSquarefree, ...) pass through.
CurveModel parse_curve_spec(std::string_view s);

}  // namespace torelli

#endif  // TORELLI_PARSE_H_
