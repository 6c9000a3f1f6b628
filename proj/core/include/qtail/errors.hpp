#pragma once

#include <stdexcept>
#include <string>

namespace qtail {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// series
class GridError : public Error { using Error::Error; };
class DenominatorNotUnit : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class InexactDivision : public Error { using Error::Error; };
class ZeroSeries : public Error { using Error::Error; };
class InsufficientTruncation : public Error { using Error::Error; };
class NonIntegerGridAfterNormalization : public Error { using Error::Error; };
class UnknownCoefficient : public Error { using Error::Error; };

// qfun / theta_fn
class DivergentInfiniteProduct : public Error { using Error::Error; };
class NonConvergent : public Error { using Error::Error; };

// skein / tails / stabilization
class IndexOutOfRange : public Error { using Error::Error; };
class PreconditionViolated : public Error { using Error::Error; };
class NonMonotoneIndices : public Error { using Error::Error; };

// bracket
class TooFewStrands : public Error { using Error::Error; };
class TooManyCrossings : public Error { using Error::Error; };
class MultiComponent : public Error { using Error::Error; };
class MalformedDiagram : public Error { using Error::Error; };

}  // namespace qtail
