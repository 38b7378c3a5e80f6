#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace tenscan {

enum class ErrorKind {
  ZeroInverse,
  Singular,
  BothZero,
  NotMonic,
  ZeroDegree,
  Inadmissible,
  DimMismatch,
  SingularWitness,
  WrongSliceCount,
  FieldTooSmall,
  NotRegular,
  UnsupportedShape,
  Unsupported,
  FieldTooLargeForSearch,
  BudgetExceeded,
  NotPrime,
  FieldMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type. `detail` carries
// structured context (offending blocks, slice-family ranks, ...) for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  nlohmann::json detail_;
};

}  // namespace tenscan
