// Copyright 2026 The strongprops Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Text formats:
//   graph        first line "n m", then m lines "i j" (0-based vertices)
//   sign pattern n lines of n characters from "+-0"
//   matrix       n lines of n whitespace-separated decimal numbers
// Parsers throw ParseError carrying the 1-based line number.

#ifndef STRONGPROPS_IO_HPP
#define STRONGPROPS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "strongprops/patterns.hpp"

namespace strongprops::io {

Graph read_graph(std::istream& in);
SignPattern read_sign_pattern(std::istream& in);
Matrix read_matrix(std::istream& in);

Graph read_graph(const std::filesystem::path& path);
SignPattern read_sign_pattern(const std::filesystem::path& path);
Matrix read_matrix(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& G);
void write_sign_pattern(std::ostream& out, const SignPattern& P);
// Shortest decimal form that parses back to the same doubles.
void write_matrix(std::ostream& out, const Matrix& A);
void write_matrix(const std::filesystem::path& path, const Matrix& A);

std::string format_double(double x);
char sign_char(Sign s);

}  // namespace strongprops::io

#endif  // STRONGPROPS_IO_HPP
