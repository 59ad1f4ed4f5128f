#pragma once

#include <stdexcept>
#include <string>

namespace chtg {

/// Base class for every mathematical-domain failure raised by the library.
/// Callers that only need to distinguish "bad input" from "bug" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested (r, alpha) lies on or beyond the existence bound.
class ExistenceViolation : public Error {
public:
    using Error::Error;
};

/// The chosen normalization chart divides by a vanishing quantity.
class DegenerateNormalization : public Error {
public:
    using Error::Error;
};

/// An invariant needs <v_k, v_k> != 0 but a vertex is ideal (r_k = 1).
class IdealVertexDegenerate : public Error {
public:
    using Error::Error;
};

/// Word length beyond the configured cap of an exponential-cost method.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The recursive trace formula needs r_k^{-1}.
class ZeroRadiusUnsupported : public Error {
public:
    using Error::Error;
};

/// Trace classification needs a determinant-one representative.
class NormalizationRequired : public Error {
public:
    using Error::Error;
};

/// Parameters are not on the locus r1^2 + r2^2 + r3^2 = 1 + 2 r1 r2 r3.
class NotInFamily : public Error {
public:
    using Error::Error;
};

class IllConditionedBasis : public Error {
public:
    using Error::Error;
};

/// Malformed input: letters outside {1,2,3}, orders below 2 and the like.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace chtg
