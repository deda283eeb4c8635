#pragma once

#include <stdexcept>
#include <string>

namespace eqlines {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EQLINES_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

EQLINES_DEFINE_ERROR(SingularMatrix);
EQLINES_DEFINE_ERROR(NotSymmetric);
EQLINES_DEFINE_ERROR(DimensionMismatch);
EQLINES_DEFINE_ERROR(ParseError);
EQLINES_DEFINE_ERROR(HypothesisViolated);
EQLINES_DEFINE_ERROR(OutOfRange);
EQLINES_DEFINE_ERROR(ConstructionMismatch);
EQLINES_DEFINE_ERROR(EmptyResult);
EQLINES_DEFINE_ERROR(MalformedGraph6);
EQLINES_DEFINE_ERROR(NotPSD);
EQLINES_DEFINE_ERROR(NotABasis);
EQLINES_DEFINE_ERROR(RankDeficient);

#undef EQLINES_DEFINE_ERROR

}  // namespace eqlines
