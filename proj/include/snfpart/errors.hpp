#pragma once

#include <stdexcept>
#include <string>

namespace snfpart {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { public: using Error::Error; };
class NotDecreasing : public Error { public: using Error::Error; };
class NonPositive : public Error { public: using Error::Error; };
class CellOutOfRange : public Error { public: using Error::Error; };
class EmptyPartition : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class NameCollision : public Error { public: using Error::Error; };
class InvalidRectangle : public Error { public: using Error::Error; };
class CornerNotOnBorder : public InvalidRectangle { public: using InvalidRectangle::InvalidRectangle; };
class DimensionMismatch : public Error { public: using Error::Error; };
class NotSquare : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };

// Raised when a geometric invariant of the extended diagram fails; always a bug.
class InternalGeometryError : public Error { public: using Error::Error; };

} // namespace snfpart
