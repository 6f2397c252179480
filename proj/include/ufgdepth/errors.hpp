#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ufgdepth {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input relation breaks a partial-order axiom.
struct ValidationError : Error {
  using Error::Error;
};

struct AntisymmetryViolation : ValidationError {
  std::size_t i, j;
  AntisymmetryViolation(std::size_t i_, std::size_t j_)
      : ValidationError("antisymmetry violated: both (" + std::to_string(i_) + ", " +
                        std::to_string(j_) + ") and its reverse are present"),
        i(i_), j(j_) {}
};

struct TransitivityViolation : ValidationError {
  std::size_t i, j, k;
  TransitivityViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : ValidationError("transitivity violated: (" + std::to_string(i_) + ", " + std::to_string(j_) +
                        ") and (" + std::to_string(j_) + ", " + std::to_string(k_) + ") present but (" +
                        std::to_string(i_) + ", " + std::to_string(k_) + ") missing"),
        i(i_), j(j_), k(k_) {}
};

struct IndexOutOfRange : ValidationError {
  IndexOutOfRange(std::size_t index, std::size_t size)
      : ValidationError("item index " + std::to_string(index) + " out of range for universe of size " +
                        std::to_string(size)) {}
};

struct UniverseMismatch : Error {
  UniverseMismatch() : Error("operands belong to different universes") {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what_op) : Error(what_op + ": nonempty input required") {}
};

struct UniverseTooLarge : Error {
  UniverseTooLarge(std::size_t size, std::size_t cap)
      : Error("universe of size " + std::to_string(size) + " exceeds the supported cap of " +
              std::to_string(cap)) {}
};

struct LengthMismatch : Error {
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("criterion vectors of unequal length: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NonFiniteValue : Error {
  NonFiniteValue() : Error("criterion values must be finite") {}
};

struct UnknownFunction : Error {
  explicit UnknownFunction(const std::string& name) : Error("unknown test function: " + name) {}
};

struct AllFunctionsDropped : Error {
  AllFunctionsDropped() : Error("every test function was dropped by the tie policy") {}
};

struct FreePairBudgetExceeded : Error {
  std::size_t free_pairs, budget;
  FreePairBudgetExceeded(std::size_t free_pairs_, std::size_t budget_)
      : Error("interval has " + std::to_string(free_pairs_) + " free pairs, above the enumeration budget of " +
              std::to_string(budget_)),
        free_pairs(free_pairs_), budget(budget_) {}
};

struct InstanceTooLarge : Error {
  using Error::Error;
};

struct FamilySampleMismatch : Error {
  FamilySampleMismatch() : Error("the family was not computed from this sample") {}
};

// CSV / query-file ingestion problems. `row` is 1-based including the header; 0 means "not row-specific".
struct ParseError : Error {
  std::size_t row = 0;
  using Error::Error;
  ParseError(const std::string& msg, std::size_t row_) : Error(msg + " (row " + std::to_string(row_) + ")"), row(row_) {}
};

struct BadHeader : ParseError {
  explicit BadHeader(const std::string& got)
      : ParseError("bad header: expected \"test_function,optimizer,criterion,direction,value\", got \"" + got + "\"") {}
};

struct MissingCell : ParseError {
  MissingCell(const std::string& fn, const std::string& opt, const std::string& crit)
      : ParseError("missing cell: function=" + fn + " optimizer=" + opt + " criterion=" + crit) {}
};

struct DuplicateCell : ParseError {
  DuplicateCell(const std::string& fn, const std::string& opt, const std::string& crit, std::size_t row_)
      : ParseError("duplicate cell: function=" + fn + " optimizer=" + opt + " criterion=" + crit, row_) {}
};

struct InconsistentDirection : ParseError {
  explicit InconsistentDirection(const std::string& crit, std::size_t row_)
      : ParseError("criterion " + crit + " tagged with conflicting directions", row_) {}
};

struct BadNumber : ParseError {
  BadNumber(const std::string& field, std::size_t row_)
      : ParseError("value \"" + field + "\" is not a finite decimal", row_) {}
};

}  // namespace ufgdepth
