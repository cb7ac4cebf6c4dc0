// Copyright 2026 The gext authors.
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

#ifndef GEXT_POLY_PARSE_HPP
#define GEXT_POLY_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gext/poly.hpp"

namespace gext {

// Text grammar shared with the command line front end:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := rational | var ('^' nat)? | '(' expr ')' ('^' nat)?
// Variables come from the supplied ring; coefficients are integers or a/b.
// Example: "x^2+y^2+z^5+t^7", "1/2*x^2 - 3*z*t^4".
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::optional<int> trunc = std::nullopt, int line_offset = 1);

}  // namespace gext

#endif
