#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LIOUVILLE_ERROR(Name) \
    class Name : public Error { public: using Error::Error; };

// geometry / coordinates
LIOUVILLE_ERROR(EquatorPoint)        ///< gnomonic projection undefined inside the equator guard band
LIOUVILLE_ERROR(DomainError)         ///< coordinate outside its admissible interval
LIOUVILLE_ERROR(BoundaryState)       ///< state sits on a coordinate boundary where Jacobians degenerate

// potentials
LIOUVILLE_ERROR(FociSingularity)     ///< separable denominator U^2-V^2 (or u^2-v^2) vanished
LIOUVILLE_ERROR(FocusSingularity)    ///< evaluation at a Kepler center
LIOUVILLE_ERROR(EquatorSingularity)  ///< potential diverges on the equator (Z -> 0)
LIOUVILLE_ERROR(BadCouplings)        ///< catalog parameters outside their validity range

// dynamics
LIOUVILLE_ERROR(StepFailure)             ///< adaptive integrator could not meet its tolerance
LIOUVILLE_ERROR(SingularPotential)       ///< force evaluation failed near a potential singularity
LIOUVILLE_ERROR(DegenerateTurningPoint)  ///< double radicand root: equilibrium level set, not integrated
LIOUVILLE_ERROR(DomainEscape)            ///< separated coordinate left its admissible interval
LIOUVILLE_ERROR(NonIntegrableEndpoint)   ///< quadrature endpoint is a multiple root

// isomorphism
LIOUVILLE_ERROR(EquatorContact)          ///< trajectory sample inside the equator guard band
LIOUVILLE_ERROR(SingularFactor)          ///< time-reparametrization factor vanished along samples
LIOUVILLE_ERROR(GluingMismatch)          ///< equator junction position/velocity disagreement
LIOUVILLE_ERROR(NoConsistentCandidate)   ///< consistency oracle: no exponent pair satisfies the ODEs

// expression DSL
LIOUVILLE_ERROR(EvaluationError)         ///< domain error while evaluating an expression

#undef LIOUVILLE_ERROR

/// Parse failure with a byte offset into the input and a description of what
/// was expected at that position.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected, const std::string& snippet)
        : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected
                + " near \"" + snippet + "\""),
          offset_(offset), expected_(expected), snippet_(snippet) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }
    const std::string& snippet() const { return snippet_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string snippet_;
};

}  // namespace liouville
