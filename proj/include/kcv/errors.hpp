#pragma once
#include <stdexcept>
#include <string>

namespace kcv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define KCV_ERROR(Name)                                   \
  struct Name : Error {                                   \
    explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
  }

KCV_ERROR(UnsupportedType);
KCV_ERROR(CapExceeded);
KCV_ERROR(GroupMismatch);
KCV_ERROR(NotInvolutionClass);
KCV_ERROR(NotTwistedInvolution);
KCV_ERROR(UnsupportedAutomorphism);
KCV_ERROR(NonUniqueJInduction);
KCV_ERROR(InconsistentSplit);
KCV_ERROR(EqualPartsForPreferred);
KCV_ERROR(IndexOutOfRange);
KCV_ERROR(SubgroupMismatch);
KCV_ERROR(ChecksumMismatch);
KCV_ERROR(VersionMismatch);
KCV_ERROR(InternalError);

#undef KCV_ERROR

}  // namespace kcv
