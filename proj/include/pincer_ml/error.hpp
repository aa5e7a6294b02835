#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pincer_ml {

enum class ErrorKind {
  BadLength,
  WildcardNotSuffix,
  EmptyCode,
  BadSymbol,
  LevelOutOfRange,
  DuplicateCode,
  EmptyTaxonomy,
  OrphanCode,
  UnknownItem,
  MalformedInput,
  IndexOutOfRange,
  MixedSizes,
  InvalidMinsup,
  InvalidConfidence,
  InvalidConfig,
  MissingSubsetSupport,
  ItemsetTooLarge,
  VocabularyTooLarge,
  InputMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::WildcardNotSuffix: return "WildcardNotSuffix";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::EmptyTaxonomy: return "EmptyTaxonomy";
    case ErrorKind::OrphanCode: return "OrphanCode";
    case ErrorKind::UnknownItem: return "UnknownItem";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MixedSizes: return "MixedSizes";
    case ErrorKind::InvalidMinsup: return "InvalidMinsup";
    case ErrorKind::InvalidConfidence: return "InvalidConfidence";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::MissingSubsetSupport: return "MissingSubsetSupport";
    case ErrorKind::ItemsetTooLarge: return "ItemsetTooLarge";
    case ErrorKind::VocabularyTooLarge: return "VocabularyTooLarge";
    case ErrorKind::InputMismatch: return "InputMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pincer_ml
