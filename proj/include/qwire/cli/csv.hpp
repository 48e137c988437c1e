// Copyright 2026 The qwire Authors
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


#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qwire::cli {

/// 12 significant digits, '.' separator; "inf", "-inf" and "nan" for
/// non-finite values.
std::string format_real(double value);

std::string join(const std::vector<std::string>& fields, char sep = ',');

/// Writes comment lines, header and rows with '\n' endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& text);
  void comments(const std::vector<std::string>& lines);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& fields);
  /// Trailer marking an aborted run; rows before it are complete.
  void error(const std::string& message);
  void flush() { out_.flush(); }

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

}  // namespace qwire::cli
