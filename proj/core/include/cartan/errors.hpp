#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cartan {

enum class ErrorKind {
    OutOfSpan,
    MixedLambda,
    DegenerateRepresentation,
    DifferentiationDepth,
    DimensionMismatch,
    OutsideDomain,
    ChartBoundary,
    NonConvergence,
    TailDivergence,
    NotEquivariant,
    DegenerateMetric,
    ConstantMap,
    NotCoprime,
    DomainViolation,
    WrongFamily,
    TrivialLiftUnavailable,
    PairDegenerate,
    NotVortexGauge,
    NonQuantized,
    WrongSource,
    Config,
};

std::string_view errorKindName(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cartan
