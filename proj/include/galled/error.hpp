#pragma once

#include <stdexcept>
#include <string>

namespace galled {

enum class ErrorCode {
  // network construction
  CycleDetected,
  NoRoot,
  MultipleRoots,
  UnreachableNode,
  LeafLabelMissing,
  LeafLabelDuplicated,
  LabelOnInternalNode,
  ParallelArc,
  SelfLoop,
  UnknownNode,
  // analysis
  NotHybrid,
  EnumerationBoundExceeded,
  PathsShareInteriorNode,
  PathsDoNotEndAtH,
  InvalidPath,
  InternalInconsistency,
  // io
  SyntaxError,
  DanglingHybridTag,
  // generators
  InfeasibleSpec,
  BoundTooLarge,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code; parser errors also carry a
/// 1-based line/column position (0 when not applicable).
class GalledError : public std::runtime_error {
 public:
  GalledError(ErrorCode code, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(format(code, message, line, column)),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, int line, int column);

  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace galled
