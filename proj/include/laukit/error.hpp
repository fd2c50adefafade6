#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laukit {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input. `kind` distinguishes the failure classes the file
/// formats can produce; `offset` is the byte position of the offending token
/// where that makes sense (scalar grammar errors), or npos otherwise.
struct ParseError : Error {
    enum class Kind { malformed, bad_scalar, dimension_mismatch, io };

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Kind kind;
    std::size_t offset;

    explicit ParseError(const std::string& what, std::size_t off = npos,
                        Kind k = Kind::malformed)
        : Error(off == npos ? what : what + " at offset " + std::to_string(off)),
          kind(k), offset(off) {}

    ParseError(const std::string& what, Kind k) : Error(what), kind(k), offset(npos) {}
};

/// A mathematical precondition failed (non-associative table, a map that is
/// not a homomorphism, a functional that is not a character, ...). These
/// carry a witness in the message and map to CLI exit code 1, as opposed to
/// usage errors which map to exit code 2.
struct MathError : Error {
    using Error::Error;
};

/// Checked algebra construction rejected a non-associative table.
/// Indices are 0-based positions of the violating basis triple.
struct NotAssociativeError : MathError {
    std::size_t i, j, k;

    NotAssociativeError(const std::string& what, std::size_t bi, std::size_t bj, std::size_t bk)
        : MathError(what), i(bi), j(bj), k(bk) {}
};

}  // namespace laukit
