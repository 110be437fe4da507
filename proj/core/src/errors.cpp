#include "cartan/errors.hpp"

namespace cartan {

std::string_view errorKindName(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::OutOfSpan: return "OutOfSpan";
    case ErrorKind::MixedLambda: return "MixedLambda";
    case ErrorKind::DegenerateRepresentation: return "DegenerateRepresentation";
    case ErrorKind::DifferentiationDepth: return "DifferentiationDepth";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::ChartBoundary: return "ChartBoundary";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::TailDivergence: return "TailDivergence";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::ConstantMap: return "ConstantMap";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::TrivialLiftUnavailable: return "TrivialLiftUnavailable";
    case ErrorKind::PairDegenerate: return "PairDegenerate";
    case ErrorKind::NotVortexGauge: return "NotVortexGauge";
    case ErrorKind::NonQuantized: return "NonQuantized";
    case ErrorKind::WrongSource: return "WrongSource";
    case ErrorKind::Config: return "Config";
    }
    return "Unknown";
}

}  // namespace cartan
