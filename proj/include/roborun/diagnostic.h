#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace roborun {

// Closed set of machine-readable error codes shared by every module.
enum class DiagCode {
  // dsl
  kParse,
  kJson,
  kMoveRange,
  kLoopRange,
  kDepth,
  kSize,
  kNotDepth,
  // interpreter
  kMoveOob,
  kLimits,
  // scoring
  kTraceMismatch,
  kTime,
  // levels
  kDim,
  kStartOob,
  kGoalOob,
  kWallOob,
  kStartOnWall,
  kGoalOnWall,
  kStartEqGoal,
  kUnsolvable,
  kNotFound,
  kIo,
  // service / codegen
  kTarget,
};

std::string_view CodeName(DiagCode code);
std::optional<DiagCode> CodeFromName(std::string_view name);

// Byte offsets into program source text, half-open.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Diagnostic {
  DiagCode code;
  std::string message;
  std::optional<int> statement_id;
  std::optional<Span> span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic MakeDiag(DiagCode code, std::string message) {
  return Diagnostic{code, std::move(message), std::nullopt, std::nullopt};
}

// Either a value or a non-empty list of diagnostics.
template <typename T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}  // NOLINT: implicit by intent
  Result(Diagnostics diags) : data_(std::move(diags)) {}  // NOLINT
  Result(Diagnostic diag) : data_(Diagnostics{std::move(diag)}) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(data_); }
  T& value() & { return std::get<T>(data_); }
  T&& value() && { return std::get<T>(std::move(data_)); }
  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }
  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }

  const Diagnostics& diagnostics() const { return std::get<Diagnostics>(data_); }

 private:
  std::variant<T, Diagnostics> data_;
};

// Human-readable one-line rendering: "E_CODE: message (statement N)".
std::string FormatDiagnostic(const Diagnostic& diag);

}  // namespace roborun
