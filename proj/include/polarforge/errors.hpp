#pragma once

#include <stdexcept>
#include <string>

namespace polarforge {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define POLARFORGE_DEFINE_ERROR(NAME)                                  \
    struct NAME : Error {                                              \
        explicit NAME(const std::string& msg)                          \
            : Error(std::string(#NAME) + ": " + msg) {}                \
    }

POLARFORGE_DEFINE_ERROR(DivisionByZero);
POLARFORGE_DEFINE_ERROR(InvalidArgument);
POLARFORGE_DEFINE_ERROR(IncompatibleDimension);
POLARFORGE_DEFINE_ERROR(DimensionMismatch);
POLARFORGE_DEFINE_ERROR(DependentVectors);
POLARFORGE_DEFINE_ERROR(DegenerateForm);
POLARFORGE_DEFINE_ERROR(TooLarge);
POLARFORGE_DEFINE_ERROR(CountMismatch);
POLARFORGE_DEFINE_ERROR(NotSingular);
POLARFORGE_DEFINE_ERROR(NotDirectSum);
POLARFORGE_DEFINE_ERROR(NotSimilarity);
POLARFORGE_DEFINE_ERROR(GramMismatch);
POLARFORGE_DEFINE_ERROR(DegenerateSpan);
POLARFORGE_DEFINE_ERROR(BadConfiguration);
POLARFORGE_DEFINE_ERROR(PatternViolation);
POLARFORGE_DEFINE_ERROR(NotDisjoint);
POLARFORGE_DEFINE_ERROR(SamePoint);
POLARFORGE_DEFINE_ERROR(NotAnOvoid);
POLARFORGE_DEFINE_ERROR(BadResidue);
POLARFORGE_DEFINE_ERROR(SquareAlpha);
POLARFORGE_DEFINE_ERROR(WrongCharacteristic);
POLARFORGE_DEFINE_ERROR(DisjointnessFailure);
POLARFORGE_DEFINE_ERROR(SearchFailed);
POLARFORGE_DEFINE_ERROR(ConfigurationFailed);

#undef POLARFORGE_DEFINE_ERROR

} // namespace polarforge
