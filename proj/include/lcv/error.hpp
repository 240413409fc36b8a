#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcv {

enum class Errc {
  // data-io
  MissingColumn,
  EmptyTable,
  DuplicateSnpId,
  EmptyIntersection,
  MalformedInput,
  Io,
  // ldsc-core
  ZeroHeritability,
  DegenerateBlocks,
  SingularRegression,
  // lcv-core
  UndefinedGcp,
  ZeroRho,
  // mr-suite
  NoInstruments,
  TooFewInstruments,
  MissingGeneticMap,
  // simulator
  InfeasibleScenario,
  SingularDiagonal,
  OverlapInfeasible,
  UnknownScenario,
  // cli-harness
  InvalidArgument,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::DuplicateSnpId: return "DuplicateSnpId";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::Io: return "Io";
    case Errc::ZeroHeritability: return "ZeroHeritability";
    case Errc::DegenerateBlocks: return "DegenerateBlocks";
    case Errc::SingularRegression: return "SingularRegression";
    case Errc::UndefinedGcp: return "UndefinedGcp";
    case Errc::ZeroRho: return "ZeroRho";
    case Errc::NoInstruments: return "NoInstruments";
    case Errc::TooFewInstruments: return "TooFewInstruments";
    case Errc::MissingGeneticMap: return "MissingGeneticMap";
    case Errc::InfeasibleScenario: return "InfeasibleScenario";
    case Errc::SingularDiagonal: return "SingularDiagonal";
    case Errc::OverlapInfeasible: return "OverlapInfeasible";
    case Errc::UnknownScenario: return "UnknownScenario";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

constexpr std::string_view errc_module(Errc c) noexcept {
  switch (c) {
    case Errc::MissingColumn:
    case Errc::EmptyTable:
    case Errc::DuplicateSnpId:
    case Errc::EmptyIntersection:
    case Errc::MalformedInput:
    case Errc::Io: return "data-io";
    case Errc::ZeroHeritability:
    case Errc::DegenerateBlocks:
    case Errc::SingularRegression: return "ldsc-core";
    case Errc::UndefinedGcp:
    case Errc::ZeroRho: return "lcv-core";
    case Errc::NoInstruments:
    case Errc::TooFewInstruments:
    case Errc::MissingGeneticMap: return "mr-suite";
    case Errc::InfeasibleScenario:
    case Errc::SingularDiagonal:
    case Errc::OverlapInfeasible:
    case Errc::UnknownScenario: return "simulator";
    case Errc::InvalidArgument: return "cli-harness";
  }
  return "unknown";
}

/// Statistical inapplicability, as opposed to bad input data.
constexpr bool is_inapplicable(Errc c) noexcept {
  return c == Errc::ZeroHeritability || c == Errc::NoInstruments ||
         c == Errc::TooFewInstruments || c == Errc::ZeroRho;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(qualified(code) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// "module/Name", e.g. "ldsc-core/ZeroHeritability".
  static std::string qualified(Errc code) {
    return std::string(errc_module(code)) + "/" + std::string(errc_name(code));
  }

 private:
  Errc code_;
};

}  // namespace lcv
