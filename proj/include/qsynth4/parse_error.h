// Copyright 2026 The qsynth4 Authors
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

#ifndef QSYNTH4_PARSE_ERROR_H
#define QSYNTH4_PARSE_ERROR_H

#include <stdexcept>
#include <string>

namespace qsynth4 {

/// Malformed text input. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
   public:
    ParseError(int line, int column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") +
                             ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &message() const { return message_; }

   private:
    int line_;
    int column_;
    std::string message_;
};

}  // namespace qsynth4

#endif
