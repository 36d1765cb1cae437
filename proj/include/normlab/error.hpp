#ifndef NORMLAB_ERROR_HPP
#define NORMLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace normlab {

enum class ErrorKind {
    OutOfRange,
    NonSquarefree,
    NotPrime,
    RamifiedPrime,
    EvenPrime,
    Imprimitive,
    SquareDiscriminant,
    DiscriminantMismatch,
    InertPrime,
    ConductorInvalid,
    WildOrRamifiedConductor,
    WildPrime,
    RamifiedInN,
    NotUnit,
    NoAdmissibleConductor,
    WrongNorm,
    OrderViolation,
    NotSubgroup,
    NotNormal,
    CommutatorNotContained,
    InvalidGroup,
    EmptyInput,
    InvalidConfig,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/* All library failures are reported through this one exception type; the
 * kind is what tests and the CLI dispatch on. */
class Error : public std::runtime_error
{
    ErrorKind kind_;

    public:
    Error(ErrorKind kind, std::string const & detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail)
        , kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }
};

} // namespace normlab

#endif /* NORMLAB_ERROR_HPP */
