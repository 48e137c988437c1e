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


#include "qwire/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qwire::cli {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string join(const std::vector<std::string>& fields, char sep) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) s += sep;
    s += fields[i];
  }
  return s;
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void CsvWriter::comments(const std::vector<std::string>& lines) {
  for (const auto& l : lines) comment(l);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  out_ << join(columns) << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_real(v));
  row(fields);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (columns_ != 0 && fields.size() != columns_) throw std::logic_error("csv row width mismatch");
  out_ << join(fields) << '\n';
}

void CsvWriter::error(const std::string& message) {
  out_ << "# ERROR: " << message << '\n';
  out_.flush();
}

}  // namespace qwire::cli
