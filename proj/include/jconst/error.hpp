#pragma once

#include <stdexcept>
#include <string>

namespace jconst {

enum class Errc {
  DegreeMismatch,
  Overflow,
  TooLarge,
  NotMember,
  LatticeExplosion,
  CatalogMismatch,
  UnsupportedField,
  SingularMatrix,
  TableMiss,
  BadParams,
  DegeneratePoints,
  InvalidPencil,
  OutOfRange,
  Timeout,
  ParseError,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

  // Resource-style failures get a distinct process exit status.
  bool is_resource() const {
    return code_ == Errc::TooLarge || code_ == Errc::Timeout || code_ == Errc::LatticeExplosion ||
           code_ == Errc::Overflow;
  }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &what) { throw Error(code, what); }

inline const char *errc_name(Errc code) {
  switch (code) {
  case Errc::DegreeMismatch: return "DegreeMismatch";
  case Errc::Overflow: return "Overflow";
  case Errc::TooLarge: return "TooLarge";
  case Errc::NotMember: return "NotMember";
  case Errc::LatticeExplosion: return "LatticeExplosion";
  case Errc::CatalogMismatch: return "CatalogMismatch";
  case Errc::UnsupportedField: return "UnsupportedField";
  case Errc::SingularMatrix: return "SingularMatrix";
  case Errc::TableMiss: return "TableMiss";
  case Errc::BadParams: return "BadParams";
  case Errc::DegeneratePoints: return "DegeneratePoints";
  case Errc::InvalidPencil: return "InvalidPencil";
  case Errc::OutOfRange: return "OutOfRange";
  case Errc::Timeout: return "Timeout";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Checked 64-bit unsigned arithmetic for group orders.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b)
    fail(Errc::Overflow, "64-bit order overflow");
  return a * b;
}

} // namespace jconst
