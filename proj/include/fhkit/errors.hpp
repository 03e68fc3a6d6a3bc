#pragma once

#include <stdexcept>
#include <string>

namespace fh {

enum class ErrorCode {
    ZeroDenominator = 10,
    NotExpandable = 11,
    UncancelledPole = 12,
    UnsupportedShape = 13,
    NotAKnot = 14,
    NotMonomialRatio = 15,
    KernelNotExpandable = 16,
    UnsupportedN = 17,
    CutoffTooSmall = 18,
    StrandMismatch = 19,
    BoxOutsideDiagram = 20,
    NonGenericParameter = 21,
    NonMonomialSubstitution = 22,
    ParseError = 23,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace fh
