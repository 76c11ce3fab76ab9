#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coframe {

enum class ErrorKind {
    NonFiniteValue,
    StepOutOfChart,
    SingularCoframe,
    IllConditioned,
    NotUnitFlag,
    PdeViolation,
    PhiConstraintViolation,
    NonPositiveV,
    LiftConventionFailure,
    PositivityViolation,
    NonPositiveCurvature,
    PreconditionViolation,
    ZeroM,
    SingularLocus,
    OutOfRangeA,
    NonUnit,
    ChartExit,
    NonHyperbolicPoint,
    UnknownStructure,
    PointOutOfChart,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this exception. `details`
// carries the offending numbers (residuals, minima) when there are any.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<double> details = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          m_kind(kind),
          m_details(std::move(details))
    {}

    ErrorKind kind() const { return m_kind; }
    const std::vector<double>& details() const { return m_details; }

private:
    ErrorKind m_kind;
    std::vector<double> m_details;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::StepOutOfChart: return "StepOutOfChart";
    case ErrorKind::SingularCoframe: return "SingularCoframe";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotUnitFlag: return "NotUnitFlag";
    case ErrorKind::PdeViolation: return "PdeViolation";
    case ErrorKind::PhiConstraintViolation: return "PhiConstraintViolation";
    case ErrorKind::NonPositiveV: return "NonPositiveV";
    case ErrorKind::LiftConventionFailure: return "LiftConventionFailure";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::NonPositiveCurvature: return "NonPositiveCurvature";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ZeroM: return "ZeroM";
    case ErrorKind::SingularLocus: return "SingularLocus";
    case ErrorKind::OutOfRangeA: return "OutOfRangeA";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::ChartExit: return "ChartExit";
    case ErrorKind::NonHyperbolicPoint: return "NonHyperbolicPoint";
    case ErrorKind::UnknownStructure: return "UnknownStructure";
    case ErrorKind::PointOutOfChart: return "PointOutOfChart";
    }
    return "Unknown";
}

} // namespace coframe
