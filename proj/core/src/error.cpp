#include "hdpot/error.hpp"

namespace hdpot {

const char* errc_name(errc c) {
    switch (c) {
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::invalid_measure: return "InvalidMeasure";
        case errc::invalid_coupling: return "InvalidCoupling";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::partition_gap: return "PartitionGap";
        case errc::invalid_ensemble: return "InvalidEnsemble";
        case errc::numerical_underflow: return "NumericalUnderflow";
        case errc::empty_data: return "EmptyData";
        case errc::numerical_failure: return "NumericalFailure";
        case errc::empty_support: return "EmptySupport";
        case errc::support_mismatch: return "SupportMismatch";
        case errc::degenerate_dirichlet: return "DegenerateDirichlet";
        case errc::supports_overlap: return "SupportsOverlap";
        case errc::unknown_experiment: return "UnknownExperiment";
        case errc::kernel_not_invertible: return "KernelNotInvertible";
        case errc::insufficient_signal: return "InsufficientSignal";
    }
    return "Error";
}

}  // namespace hdpot
