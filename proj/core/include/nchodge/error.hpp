#ifndef NCHODGE_ERROR_HPP
#define NCHODGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nchodge {

// Base of every error the library throws. `code()` is a stable
// machine-readable tag used by the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define NCHODGE_DEFINE_ERROR(Name, tag)                                \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(tag, what) {}       \
  };

NCHODGE_DEFINE_ERROR(ArithmeticError, "arithmetic")
NCHODGE_DEFINE_ERROR(FieldMismatchError, "field_mismatch")
NCHODGE_DEFINE_ERROR(InvalidInputError, "invalid_input")
NCHODGE_DEFINE_ERROR(DegreeRangeError, "degree_range")
NCHODGE_DEFINE_ERROR(ShapeError, "shape")
NCHODGE_DEFINE_ERROR(ChainMapError, "commutation")
NCHODGE_DEFINE_ERROR(InvolutionError, "involution")
NCHODGE_DEFINE_ERROR(FiltrationError, "filtration")
NCHODGE_DEFINE_ERROR(FiltrationMissingError, "filtration_missing")
NCHODGE_DEFINE_ERROR(WeightMissingError, "weight_missing")
NCHODGE_DEFINE_ERROR(EmptyVarietyError, "empty_variety")
NCHODGE_DEFINE_ERROR(SearchFailureError, "search_failure")
NCHODGE_DEFINE_ERROR(UnsupportedInputError, "unsupported_input")

#undef NCHODGE_DEFINE_ERROR

}  // namespace nchodge

#endif  // NCHODGE_ERROR_HPP
