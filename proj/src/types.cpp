#include "ptreg/types.hpp"

namespace ptreg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::PoleInC: return "PoleInC";
    case ErrorKind::DegenerateRecurrence: return "DegenerateRecurrence";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DerivativeInconsistency: return "DerivativeInconsistency";
    case ErrorKind::BranchDiscontinuity: return "BranchDiscontinuity";
    case ErrorKind::DegenerateS: return "DegenerateS";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::MetricVanishing: return "MetricVanishing";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ShiftSingular: return "ShiftSingular";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::QRStall: return "QRStall";
  }
  return "Unknown";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Eckart: return "eckart";
    case Family::PoschlTeller: return "rpt";
    case Family::Hulthen: return "hulthen";
  }
  return "unknown";
}

}  // namespace ptreg
