#pragma once

#include <stdexcept>
#include <string>

namespace sdrforge {

// Base class for all errors raised by this library. `kind()` is a stable
// machine-readable tag; `message()` the detail without the tag prefix.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string message)
        : std::runtime_error(kind + ": " + message),
          kind_(std::move(kind)),
          message_(std::move(message)) {}

    const std::string& kind() const { return kind_; }
    const std::string& message() const { return message_; }

private:
    std::string kind_;
    std::string message_;
};

#define SDRFORGE_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& message)                     \
            : Error(#Name, message) {}                                \
    }

SDRFORGE_DEFINE_ERROR(FileNotFound);
SDRFORGE_DEFINE_ERROR(ParseError);
SDRFORGE_DEFINE_ERROR(EmptyMesh);
SDRFORGE_DEFINE_ERROR(InvalidSize);
SDRFORGE_DEFINE_ERROR(AspectError);
SDRFORGE_DEFINE_ERROR(EmptyLibrary);
SDRFORGE_DEFINE_ERROR(StyleMismatch);
SDRFORGE_DEFINE_ERROR(UnknownId);
SDRFORGE_DEFINE_ERROR(EmptyMask);
SDRFORGE_DEFINE_ERROR(IoError);
SDRFORGE_DEFINE_ERROR(ManifestMismatch);
SDRFORGE_DEFINE_ERROR(DegenerateBox);
SDRFORGE_DEFINE_ERROR(UnknownImageId);
SDRFORGE_DEFINE_ERROR(UnknownCategory);
SDRFORGE_DEFINE_ERROR(ConfigError);
SDRFORGE_DEFINE_ERROR(IntegrityError);
SDRFORGE_DEFINE_ERROR(RangeError);
SDRFORGE_DEFINE_ERROR(EmptySamples);
SDRFORGE_DEFINE_ERROR(EmptyGroup);

#undef SDRFORGE_DEFINE_ERROR

}  // namespace sdrforge
