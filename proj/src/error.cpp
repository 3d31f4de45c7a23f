#include "forcelab/error.hpp"

namespace forcelab {

std::string_view code_name(Code c) {
  switch (c) {
    case Code::NonMonotoneF: return "NON_MONOTONE_F";
    case Code::BadLevelOrder: return "BAD_LEVEL_ORDER";
    case Code::FTooSmall: return "F_TOO_SMALL";
    case Code::MissingPredecessor: return "MISSING_PREDECESSOR";
    case Code::AmbiguousPredecessor: return "AMBIGUOUS_PREDECESSOR";
    case Code::LimitSplit: return "LIMIT_SPLIT";
    case Code::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case Code::NonemptyLimitLabel: return "NONEMPTY_LIMIT_LABEL";
    case Code::CapExceeded: return "CAP_EXCEEDED";
    case Code::Incompatible: return "INCOMPATIBLE";
    case Code::NonRectangular: return "NON_RECTANGULAR";
    case Code::FreeCells: return "FREE_CELLS";
    case Code::NotAnExtension: return "NOT_AN_EXTENSION";
    case Code::StructureMismatch: return "STRUCTURE_MISMATCH";
    case Code::NoWitness: return "NO_WITNESS";
    case Code::NotInDomain: return "NOT_IN_DOMAIN";
    case Code::BlockExhausted: return "BLOCK_EXHAUSTED";
    case Code::Precondition: return "PRECONDITION";
    case Code::Overlap: return "OVERLAP";
    case Code::NotComparable: return "NOT_COMPARABLE";
    case Code::NotTilde: return "NOT_TILDE";
    case Code::NotBelowRbar: return "NOT_BELOW_RBAR";
    case Code::PoolExhausted: return "POOL_EXHAUSTED";
    case Code::DomainMismatch: return "DOMAIN_MISMATCH";
    case Code::ConfigError: return "CONFIG_ERROR";
    case Code::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

std::string describe(const Error& e) {
  std::string out(code_name(e.code));
  if (!e.detail.empty()) out += ": " + e.detail;
  return out;
}

std::string describe(const Errors& es) {
  std::string out;
  for (const auto& e : es) {
    if (!out.empty()) out += "; ";
    out += describe(e);
  }
  return out;
}

}  // namespace forcelab
