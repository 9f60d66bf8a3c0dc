#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>

#include "lexalign/errors.hpp"

namespace lexalign {

// Short lowercase language code ("en", "fr"). Compared by exact string equality.
struct LanguageId {
  std::string code;

  LanguageId() = default;
  explicit LanguageId(std::string c) : code(std::move(c)) {
    if (code.empty()) throw DataError("empty language code");
  }

  bool operator==(const LanguageId&) const = default;
  auto operator<=>(const LanguageId&) const = default;
};

}  // namespace lexalign

template <>
struct std::hash<lexalign::LanguageId> {
  std::size_t operator()(const lexalign::LanguageId& l) const noexcept {
    return std::hash<std::string>{}(l.code);
  }
};
