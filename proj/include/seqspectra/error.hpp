#pragma once

#include <stdexcept>
#include <string>

namespace seqspectra {

enum class Errc {
  InvalidParams,
  CapExceeded,
  ZeroArgument,
  NotInSubfield,
  NotInQuadraticSubfield,
  NotRepresentable,
  NonIntegerCount,
  NonSubfieldKernel,
  UnsupportedBranch,
  NonIntegerWeight,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::NotInQuadraticSubfield: return "NotInQuadraticSubfield";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NonIntegerCount: return "NonIntegerCount";
    case Errc::NonSubfieldKernel: return "NonSubfieldKernel";
    case Errc::UnsupportedBranch: return "UnsupportedBranch";
    case Errc::NonIntegerWeight: return "NonIntegerWeight";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace seqspectra
