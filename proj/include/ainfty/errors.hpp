#pragma once

#include <stdexcept>
#include <string>

namespace ainfty {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define AINFTY_ERROR(Name)                                              \
    struct Name : Error {                                               \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

AINFTY_ERROR(ArityMismatch);
AINFTY_ERROR(UnknownGenerator);
AINFTY_ERROR(PositionOutOfRange);
AINFTY_ERROR(DegreeMismatch);
AINFTY_ERROR(FiltrationViolation);
AINFTY_ERROR(MissingUnit);
AINFTY_ERROR(NotNilpotent);
AINFTY_ERROR(WrongDegree);
AINFTY_ERROR(NotDG);
AINFTY_ERROR(NotAComplex);
AINFTY_ERROR(NotChainMap);
AINFTY_ERROR(NotUnital);
AINFTY_ERROR(NotStrictlyCompatible);
AINFTY_ERROR(NotIsomorphism);
AINFTY_ERROR(NotFiltrationPreserving);
AINFTY_ERROR(N0DoesNotIncrease);
AINFTY_ERROR(NoSolution);
AINFTY_ERROR(Divergence);
AINFTY_ERROR(SystemNotCommuting);
AINFTY_ERROR(MalformedTree);
AINFTY_ERROR(ColorMismatch);
AINFTY_ERROR(BadConnection);
AINFTY_ERROR(TruncationUnsound);
AINFTY_ERROR(SemanticError);

#undef AINFTY_ERROR

// Parse errors carry a position.
struct SyntaxError : Error {
    int line, column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error("SyntaxError at " + std::to_string(line_) + ":" +
                std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace ainfty
