#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Window length below the minimum of 2.
class InvalidWindowError : public Error {
public:
    using Error::Error;
};

/// A requested keyword stem does not occur in the matrix vocabulary.
class KeywordAbsentError : public Error {
public:
    KeywordAbsentError(std::string stem, const std::string& source)
        : Error("keyword '" + stem + "' absent" +
                (source.empty() ? std::string{} : " from document '" + source + "'")),
          stem_(std::move(stem)) {}

    const std::string& stem() const noexcept { return stem_; }

private:
    std::string stem_;
};

/// Word vectors are parallel; no plane can be spanned.
class DegeneratePairError : public Error {
public:
    using Error::Error;
};

class ZeroVectorError : public Error {
public:
    using Error::Error;
};

class ZeroProjectionError : public Error {
public:
    using Error::Error;
};

class EmptyDocumentError : public Error {
public:
    using Error::Error;
};

/// Query text could not be parsed; position is a 0-based byte offset.
class QueryParseError : public Error {
public:
    QueryParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace halq
