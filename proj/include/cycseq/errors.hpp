#pragma once

#include <stdexcept>
#include <string>

namespace cycseq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CYCSEQ_DEFINE_ERROR(Name)                                              \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

CYCSEQ_DEFINE_ERROR(DivisionByZeroPolynomial);
CYCSEQ_DEFINE_ERROR(NotCoprime);
CYCSEQ_DEFINE_ERROR(DegenerateVertex);
CYCSEQ_DEFINE_ERROR(NoRealRoot);
CYCSEQ_DEFINE_ERROR(DegenerateGamma);
CYCSEQ_DEFINE_ERROR(ZeroIncrement);
CYCSEQ_DEFINE_ERROR(NonPositiveCoefficient);
CYCSEQ_DEFINE_ERROR(IllegitimateOrdering);
CYCSEQ_DEFINE_ERROR(NotQcs);
CYCSEQ_DEFINE_ERROR(IrrationalIncrement);
CYCSEQ_DEFINE_ERROR(InsufficientMultiplicity);
CYCSEQ_DEFINE_ERROR(BudgetExceeded);
CYCSEQ_DEFINE_ERROR(InfeasibleFlow);
CYCSEQ_DEFINE_ERROR(Disconnected);
CYCSEQ_DEFINE_ERROR(InsufficientArcs);
CYCSEQ_DEFINE_ERROR(IllegitimateInput);
CYCSEQ_DEFINE_ERROR(NoUnitModulusRoot);
CYCSEQ_DEFINE_ERROR(NotAchievedWithinBound);
CYCSEQ_DEFINE_ERROR(InfeasibleEndpoint);
CYCSEQ_DEFINE_ERROR(InequalityViolated);
CYCSEQ_DEFINE_ERROR(NonIntegerCoefficient);

#undef CYCSEQ_DEFINE_ERROR

} // namespace cycseq
