#pragma once

#include <stdexcept>

namespace voxmark {

// Base class for every error thrown by this toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadMagic : Error { using Error::Error; };
struct TruncatedFile : Error { using Error::Error; };
struct NonPositiveDims : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct OutOfBounds : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InfeasiblePlacement : Error { using Error::Error; };
struct SingularTransform : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct DegenerateBatch : Error { using Error::Error; };
struct NonScalarLoss : Error { using Error::Error; };
struct EmptyMask : Error { using Error::Error; };
struct IdMismatch : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct HookLayerMissing : Error { using Error::Error; };
struct ZeroMass : Error { using Error::Error; };

}  // namespace voxmark
