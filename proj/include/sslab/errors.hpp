#pragma once

#include <stdexcept>
#include <string>

namespace sslab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SSLAB_ERROR_TYPE(Name)                                    \
  struct Name : Error {                                           \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

SSLAB_ERROR_TYPE(ZeroSlopeError);
SSLAB_ERROR_TYPE(NonPrimitiveError);
SSLAB_ERROR_TYPE(NotUnimodularError);
SSLAB_ERROR_TYPE(BadBoundaryIndexError);
SSLAB_ERROR_TYPE(NotNormalizedError);
SSLAB_ERROR_TYPE(NoTorsionSlopeError);
SSLAB_ERROR_TYPE(NotUniqueError);
SSLAB_ERROR_TYPE(TooLargeError);
SSLAB_ERROR_TYPE(RankNotOneError);
SSLAB_ERROR_TYPE(NotQHSError);
SSLAB_ERROR_TYPE(BudgetExceededError);
SSLAB_ERROR_TYPE(EmptyConesError);
SSLAB_ERROR_TYPE(BadPError);
SSLAB_ERROR_TYPE(ParseError);
SSLAB_ERROR_TYPE(ValidationError);

#undef SSLAB_ERROR_TYPE

}  // namespace sslab
