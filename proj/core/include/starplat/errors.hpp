// Copyright 2026 The StarPlat Compiler Authors
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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starplat {

/// 1-based line/column into a source text.
struct SourcePos {
  int line = 0;
  int col = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

/// First and last token of a construct.
struct Span {
  SourcePos begin;
  SourcePos end;

  bool contains(const Span& inner) const {
    return begin <= inner.begin && inner.end <= end;
  }
};

enum class Severity { Error, Warning, Note };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::optional<SourcePos> pos;
  std::string message;
};

/// Renders `file:line:col: severity: message` (position omitted when unknown).
std::string format_diagnostic(const std::string& file, const Diagnostic& d);

/// Base of every error raised by the library. Carries an optional source
/// position so the CLI can print positioned diagnostics uniformly.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string message,
        std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), kind_(std::move(kind)), pos_(pos) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& pos() const noexcept { return pos_; }

  Diagnostic diagnostic() const {
    return Diagnostic{Severity::Error, pos_, kind_ + ": " + what()};
  }

 private:
  std::string kind_;
  std::optional<SourcePos> pos_;
};

#define STARPLAT_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(std::string message,                                  \
                  std::optional<SourcePos> pos = std::nullopt)          \
        : Error(#Name, std::move(message), pos) {}                      \
  };

// Front end.
STARPLAT_DEFINE_ERROR(LexError)
STARPLAT_DEFINE_ERROR(TypeError)
STARPLAT_DEFINE_ERROR(SemaError)
// Graph core.
STARPLAT_DEFINE_ERROR(IoError)
STARPLAT_DEFINE_ERROR(FormatError)
STARPLAT_DEFINE_ERROR(RangeError)
STARPLAT_DEFINE_ERROR(ArgError)
STARPLAT_DEFINE_ERROR(EmptyGraphError)
// Execution.
STARPLAT_DEFINE_ERROR(RuntimeError)
STARPLAT_DEFINE_ERROR(SizeError)
STARPLAT_DEFINE_ERROR(PartitionError)
// Code generation.
STARPLAT_DEFINE_ERROR(EmitError)

#undef STARPLAT_DEFINE_ERROR

/// Grammar violation. `expected` lists the token spellings that would have
/// been accepted at `span`.
class ParseError : public Error {
 public:
  ParseError(Span span, std::vector<std::string> expected, std::string found);

  const Span& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
  std::string found_;
};

}  // namespace starplat
