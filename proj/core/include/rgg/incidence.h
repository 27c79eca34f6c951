// Copyright 2026 The Authors.
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
#ifndef RGG_INCIDENCE_H_
#define RGG_INCIDENCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rgg {

// A 0/1 vector over the resource set. Lexicographic order on these vectors is
// the canonical order used for every enumeration and tie-break.
using Incidence = std::vector<std::uint8_t>;

Incidence FromSupport(int num_resources, std::span<const int> support);
inline Incidence FromSupport(int num_resources,
                             std::initializer_list<int> support) {
  return FromSupport(num_resources,
                     std::span<const int>(support.begin(), support.size()));
}
std::vector<int> Support(const Incidence& vector);
int Cardinality(const Incidence& vector);
std::string IncidenceToString(const Incidence& vector);

}  // namespace rgg

#endif  // RGG_INCIDENCE_H_
