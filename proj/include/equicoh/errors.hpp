#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace equicoh {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear system with identically vanishing determinant.  Carries the
// determinant polynomial (rendered) so callers can report what degenerated.
struct SingularSystemError : Error {
  std::string determinant;
  explicit SingularSystemError(const std::string& det)
      : Error("singular linear system: determinant " + det + " vanishes"), determinant(det) {}
};

// A matrix expected to be regular semisimple was not; lists the vanishing
// root differences.
struct RegularityError : Error {
  std::vector<std::string> vanishing_roots;
  explicit RegularityError(std::vector<std::string> roots)
      : Error(make_message(roots)), vanishing_roots(std::move(roots)) {}

 private:
  static std::string make_message(const std::vector<std::string>& roots) {
    std::string msg = "matrix is not regular semisimple; vanishing roots:";
    for (const auto& r : roots) msg += " " + r;
    return msg;
  }
};

// Additive Jordan decomposition requested for an operator whose semisimple
// part is not defined over the rationals.
struct NotSplitError : Error {
  explicit NotSplitError(const std::string& msg) : Error(msg) {}
};

// A generator violated a required (weighted) homogeneity; names the offender.
struct HomogeneityError : Error {
  std::string offender;
  explicit HomogeneityError(const std::string& gen)
      : Error("generator is not weighted-homogeneous: " + gen), offender(gen) {}
};

// Deterministic computation budget exceeded (Groebner step limit etc.).
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Scenario file could not be parsed/validated; 1-based line/column.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int ln, int col, const std::string& msg)
      : Error("line " + std::to_string(ln) + ", column " + std::to_string(col) + ": " + msg),
        line(ln),
        column(col) {}
};

// An internal cross-check failed (two independent computations disagree).
struct VerificationError : Error {
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

// Operands belong to different polynomial rings.
struct RingMismatchError : Error {
  explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// A chart operation degenerated (vanishing coordinate minor etc.); names it.
struct ChartError : Error {
  std::string minor_name;
  ChartError(const std::string& minor, const std::string& msg)
      : Error(msg), minor_name(minor) {}
};

}  // namespace equicoh
