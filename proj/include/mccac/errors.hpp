#ifndef MCCAC_ERRORS_HPP
#define MCCAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mccac {

/// Weight outside the range handled by a classification or bound (w must be 3 or 4).
class UnsupportedWeightError : public std::invalid_argument {
public:
    explicit UnsupportedWeightError(const std::string& what) : std::invalid_argument(what) {}
};

/// Channel count below the threshold required by a closed-form bound.
class BoundNotApplicableError : public std::invalid_argument {
public:
    explicit BoundNotApplicableError(const std::string& what) : std::invalid_argument(what) {}
};

/// Number-theoretic hypothesis of a construction is not met by the input.
class HypothesisNotMetError : public std::invalid_argument {
public:
    explicit HypothesisNotMetError(const std::string& what) : std::invalid_argument(what) {}
};

/// A composition ingredient (tight CAC, GBRD, ...) could not be obtained.
class ConstructionUnavailableError : public std::runtime_error {
public:
    ConstructionUnavailableError(const std::string& missing, const std::string& detail)
        : std::runtime_error("construction unavailable: missing " + missing + " (" + detail + ")"),
          missing_ingredient(missing) {}
    std::string missing_ingredient;
};

/// Design dimensions violate a divisibility requirement, so no array of that shape exists.
class ShapeInfeasibleError : public std::invalid_argument {
public:
    explicit ShapeInfeasibleError(const std::string& what) : std::invalid_argument(what) {}
};

/// Enumeration universe exceeds the configured cap.
class InstanceTooLargeError : public std::invalid_argument {
public:
    explicit InstanceTooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A simulated node references a pattern that is not part of the code.
class UnknownCodewordError : public std::invalid_argument {
public:
    explicit UnknownCodewordError(const std::string& what) : std::invalid_argument(what) {}
};

/// Cross-correlation requested for a codeword paired with itself.
class InvalidPairError : public std::invalid_argument {
public:
    explicit InvalidPairError(const std::string& what) : std::invalid_argument(what) {}
};

/// Code file could not be parsed (syntax, schema version, missing fields).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed data violates a structural invariant (entry range, weight, duplicate entries).
class CodeValidationError : public std::runtime_error {
public:
    explicit CodeValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mccac

#endif  // MCCAC_ERRORS_HPP
