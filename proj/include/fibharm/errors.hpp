#pragma once

#include <stdexcept>
#include <string>

namespace fibharm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FIBHARM_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

FIBHARM_DEFINE_ERROR(DivisionByZero);
FIBHARM_DEFINE_ERROR(DegreeOverflow);
FIBHARM_DEFINE_ERROR(HarmonicPole);
FIBHARM_DEFINE_ERROR(DomainError);
FIBHARM_DEFINE_ERROR(UnsupportedBinomial);
FIBHARM_DEFINE_ERROR(PairMismatch);
FIBHARM_DEFINE_ERROR(NotFound);
FIBHARM_DEFINE_ERROR(BadAssignment);
FIBHARM_DEFINE_ERROR(ParseError);
FIBHARM_DEFINE_ERROR(EncodingBug);

#undef FIBHARM_DEFINE_ERROR

}  // namespace fibharm
