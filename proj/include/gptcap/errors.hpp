#ifndef GPTCAP_ERRORS_HPP
#define GPTCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gptcap {

// Base class for everything this library throws on bad input or broken
// preconditions. Internal consistency failures (certificates that do not
// verify, impossible branches) throw std::logic_error instead: those are
// bugs, not user errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};
struct InvalidModel : Error {
    explicit InvalidModel(const std::string& what) : Error(what) {}
};
struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& what) : Error(what) {}
};
struct InvalidState : Error {
    explicit InvalidState(const std::string& what) : Error(what) {}
};
struct InvalidEffect : Error {
    explicit InvalidEffect(const std::string& what) : Error(what) {}
};
struct InvalidMeasurement : Error {
    explicit InvalidMeasurement(const std::string& what) : Error(what) {}
};
struct InvalidDistribution : Error {
    explicit InvalidDistribution(const std::string& what) : Error(what) {}
};
struct InvalidEpsilon : Error {
    explicit InvalidEpsilon(const std::string& what) : Error(what) {}
};
struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};
struct ContradictionDetected : Error {
    explicit ContradictionDetected(const std::string& what) : Error(what) {}
};
struct DegenerateCase : Error {
    explicit DegenerateCase(const std::string& what) : Error(what) {}
};
struct ScaleExceeded : Error {
    explicit ScaleExceeded(const std::string& what) : Error(what) {}
};
struct EmptyGrid : Error {
    explicit EmptyGrid(const std::string& what) : Error(what) {}
};

} // namespace gptcap

#endif
