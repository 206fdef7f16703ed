#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

/// Base class of every error raised by the library. `kind()` names the
/// failure in the vocabulary used by the CLI and the verification reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define NILCONE_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name, what) {}  \
    }

NILCONE_DEFINE_ERROR(FieldMismatch);
NILCONE_DEFINE_ERROR(DimensionMismatch);
NILCONE_DEFINE_ERROR(DivisionByZero);
NILCONE_DEFINE_ERROR(NotNilpotent);
NILCONE_DEFINE_ERROR(NonSplitSpectrum);
NILCONE_DEFINE_ERROR(WedgeViolation);
NILCONE_DEFINE_ERROR(CharTwo);
NILCONE_DEFINE_ERROR(BudgetExceeded);
NILCONE_DEFINE_ERROR(SizeMismatch);
NILCONE_DEFINE_ERROR(NotRigidDatum);
NILCONE_DEFINE_ERROR(NotDoubled);
NILCONE_DEFINE_ERROR(RepeatedEigenvalue);
NILCONE_DEFINE_ERROR(NotPerfectSquare);
NILCONE_DEFINE_ERROR(ModuleMismatch);
NILCONE_DEFINE_ERROR(ParseError);
NILCONE_DEFINE_ERROR(IOError);

#undef NILCONE_DEFINE_ERROR

}  // namespace nilcone
