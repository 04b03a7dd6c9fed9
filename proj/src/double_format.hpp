// Copyright 2026 the nichemip authors
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

#ifndef NICHEMIP_SRC_DOUBLE_FORMAT_HPP_
#define NICHEMIP_SRC_DOUBLE_FORMAT_HPP_

#include <charconv>
#include <string>

namespace nichemip {

/// Shortest decimal string that parses back to the same double; used for MPS
/// and CSV output so emitted files are byte-deterministic and lossless.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace nichemip

#endif  // NICHEMIP_SRC_DOUBLE_FORMAT_HPP_
