#ifndef COREF_ERRORS_HPP
#define COREF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coref {

// Base class for every error raised by the library. CLI maps these to exit 1.
struct CorefError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : CorefError {
  using CorefError::CorefError;
};
struct ValidationError : CorefError {
  using CorefError::CorefError;
};
struct IncompatibleTemplates : CorefError {
  using CorefError::CorefError;
};
struct OrderViolation : CorefError {
  using CorefError::CorefError;
};
struct MissingKey : CorefError {
  using CorefError::CorefError;
};
// Invalid coreference configuration; also covers malformed gold keys.
struct InvalidConfiguration : CorefError {
  using CorefError::CorefError;
};
struct SetTooLarge : CorefError {
  using CorefError::CorefError;
};
struct EverythingPruned : CorefError {
  using CorefError::CorefError;
};
struct InfeasibleBelief : CorefError {
  using CorefError::CorefError;
};
struct TotalConflict : CorefError {
  using CorefError::CorefError;
};
struct AllZero : CorefError {
  using CorefError::CorefError;
};
struct DegenerateFeature : CorefError {
  using CorefError::CorefError;
};
struct NoConvergence : CorefError {
  using CorefError::CorefError;
};
struct VersionMismatch : CorefError {
  using CorefError::CorefError;
};

}  // namespace coref

#endif  // COREF_ERRORS_HPP
