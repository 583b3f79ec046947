#pragma once

#include <stdexcept>
#include <string>

namespace cdc {

/// Base class of every error raised by the library. The CLI maps any of
/// these to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CDC_DEFINE_ERROR(Name)              \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

CDC_DEFINE_ERROR(InvalidGeometry);
CDC_DEFINE_ERROR(EmptyDifference);
CDC_DEFINE_ERROR(Unrealizable);
CDC_DEFINE_ERROR(MissingVariable);
CDC_DEFINE_ERROR(DuplicateConstraint);
CDC_DEFINE_ERROR(InvalidNetwork);
CDC_DEFINE_ERROR(NotUlc);
CDC_DEFINE_ERROR(PreconditionViolation);
CDC_DEFINE_ERROR(ParseError);
CDC_DEFINE_ERROR(NotThreeSat);
CDC_DEFINE_ERROR(TooLarge);
CDC_DEFINE_ERROR(AlreadyCompiled);

#undef CDC_DEFINE_ERROR

}  // namespace cdc
