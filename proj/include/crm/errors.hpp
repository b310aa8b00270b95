#pragma once

#include <stdexcept>
#include <string>

namespace crm {

struct WindowTooShort : std::runtime_error {
    explicit WindowTooShort(const std::string& m) : std::runtime_error(m) {}
};
struct DegreeWindowTooSmall : std::runtime_error {
    explicit DegreeWindowTooSmall(const std::string& m) : std::runtime_error(m) {}
};
struct NotFinitelyGeneratedInWindow : std::runtime_error {
    explicit NotFinitelyGeneratedInWindow(const std::string& m) : std::runtime_error(m) {}
};
struct WindowMismatch : std::runtime_error {
    explicit WindowMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct MuNotSurjective : std::runtime_error {
    explicit MuNotSurjective(const std::string& m) : std::runtime_error(m) {}
};
struct NoSurjectionFound : std::runtime_error {
    explicit NoSurjectionFound(const std::string& m) : std::runtime_error(m) {}
};
struct PurityCheckFailed : std::runtime_error {
    explicit PurityCheckFailed(const std::string& m) : std::runtime_error(m) {}
};
struct InsufficientChain : std::runtime_error {
    explicit InsufficientChain(const std::string& m) : std::runtime_error(m) {}
};
struct MonadConditionFailed : std::runtime_error {
    explicit MonadConditionFailed(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateSample : std::runtime_error {
    explicit DegenerateSample(const std::string& m) : std::runtime_error(m) {}
};
struct RootNotLinear : std::runtime_error {
    explicit RootNotLinear(const std::string& m) : std::runtime_error(m) {}
};
struct FieldReductionImpossible : std::runtime_error {
    explicit FieldReductionImpossible(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace crm
