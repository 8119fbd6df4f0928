// Copyright 2026 The Gaussamp Authors
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

#ifndef GAUSSAMP_CSV_HPP_
#define GAUSSAMP_CSV_HPP_

#include <string>
#include <vector>

namespace gaussamp {

/// 17 significant digits, '.' decimal point, locale-independent; doubles
/// round-trip exactly.
std::string format_double(double v);

/// Comma-joined row with LF terminator.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace gaussamp

#endif  // GAUSSAMP_CSV_HPP_
