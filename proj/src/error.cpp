#include "specbound/error.hpp"

namespace specbound {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotEquitable: return "NotEquitable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NotTwoByTwo: return "NotTwoByTwo";
    case ErrorKind::InvalidFill: return "InvalidFill";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::UnsupportedMix: return "UnsupportedMix";
    case ErrorKind::PartitionSpaceTooLarge: return "PartitionSpaceTooLarge";
    case ErrorKind::EnclosureDisagreement: return "EnclosureDisagreement";
    case ErrorKind::InvalidOptions: return "InvalidOptions";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace specbound
