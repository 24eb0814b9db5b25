#pragma once

#include <stdexcept>
#include <string>

namespace promdig {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PROMDIG_DEFINE_ERROR(Name)         \
    struct Name : Error {                  \
        using Error::Error;                \
    }

// tableaux
PROMDIG_DEFINE_ERROR(ShapeMismatch);
PROMDIG_DEFINE_ERROR(NotBijective);
PROMDIG_DEFINE_ERROR(RowNotIncreasing);
PROMDIG_DEFINE_ERROR(ColumnNotIncreasing);
PROMDIG_DEFINE_ERROR(SymbolOutOfRange);
PROMDIG_DEFINE_ERROR(NonCanonicalAlphabet);
PROMDIG_DEFINE_ERROR(NotLattice);
PROMDIG_DEFINE_ERROR(InvalidShape);

// promotion
PROMDIG_DEFINE_ERROR(OrderExceedsBound);

// digraphs
PROMDIG_DEFINE_ERROR(InconsistentDigraphs);
PROMDIG_DEFINE_ERROR(NotRectangularWitness);

// noncrossing
PROMDIG_DEFINE_ERROR(WrongShape);
PROMDIG_DEFINE_ERROR(NotNoncrossing);
PROMDIG_DEFINE_ERROR(NotPartition);
PROMDIG_DEFINE_ERROR(NoValidPartition);
PROMDIG_DEFINE_ERROR(BlockCountMismatch);
PROMDIG_DEFINE_ERROR(SingletonFirstBlock);

// plabic
PROMDIG_DEFINE_ERROR(BoundaryDegree);
PROMDIG_DEFINE_ERROR(InconsistentRotation);
PROMDIG_DEFINE_ERROR(NotPlanar);
PROMDIG_DEFINE_ERROR(DegreeBelowThreshold);
PROMDIG_DEFINE_ERROR(NotFlamingo);

// enumerate / harness / io
PROMDIG_DEFINE_ERROR(CapExceeded);
PROMDIG_DEFINE_ERROR(ParseError);

#undef PROMDIG_DEFINE_ERROR

}  // namespace promdig
