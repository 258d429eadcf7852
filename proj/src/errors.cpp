#include "biwalk/errors.hpp"

namespace biwalk {

const char* err_name(Err code) {
  switch (code) {
    case Err::NonSymmetric: return "NonSymmetric";
    case Err::NonHermitian: return "NonHermitian";
    case Err::NoConvergence: return "NoConvergence";
    case Err::NotBipartite: return "NotBipartite";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::IsolatedVertex: return "IsolatedVertex";
    case Err::BadSize: return "BadSize";
    case Err::BadLabel: return "BadLabel";
    case Err::NotPrime: return "NotPrime";
    case Err::NotPrimePower: return "NotPrimePower";
    case Err::InvalidRotation: return "InvalidRotation";
    case Err::Disconnected: return "Disconnected";
    case Err::SpectralMismatch: return "SpectralMismatch";
    case Err::NotUnit: return "NotUnit";
    case Err::DriftExceeded: return "DriftExceeded";
    case Err::MinusOnePersists: return "MinusOnePersists";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::NotIsomorphic: return "NotIsomorphic";
    case Err::NoGamma: return "NoGamma";
    case Err::Mismatch: return "Mismatch";
    case Err::NotUniversal: return "NotUniversal";
    case Err::Parse: return "Parse";
    case Err::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace biwalk
