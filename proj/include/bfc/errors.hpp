#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BFC_DEFINE_ERROR(Name)                      \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name) + ": " + what) {} \
  };

BFC_DEFINE_ERROR(BoundExceeded)
BFC_DEFINE_ERROR(InvalidPermutation)
BFC_DEFINE_ERROR(InvalidPartition)
BFC_DEFINE_ERROR(NotReduced)
BFC_DEFINE_ERROR(NotGrassmannian)
BFC_DEFINE_ERROR(MalformedMaya)
BFC_DEFINE_ERROR(NotStrongRibbon)
BFC_DEFINE_ERROR(SizeMismatch)
BFC_DEFINE_ERROR(NotContained)
BFC_DEFINE_ERROR(NotSymmetric)
BFC_DEFINE_ERROR(UnsupportedWindow)
BFC_DEFINE_ERROR(NotInSNeq0)
BFC_DEFINE_ERROR(NoConvergence)
BFC_DEFINE_ERROR(NonGrassmannianSupport)
BFC_DEFINE_ERROR(NonIntegralCoefficient)
BFC_DEFINE_ERROR(ParseError)

#undef BFC_DEFINE_ERROR

}  // namespace bfc
