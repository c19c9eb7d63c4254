#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finsep {

enum class Errc {
    FieldMismatch,
    ZeroInverse,
    DivisionByZero,
    BothZero,
    ConstantInput,
    ZeroPolynomial,
    DenominatorVanishes,
    EvenCharacteristic,
    BadPrime,
    UnsupportedFamily,
    InseparableInput,
    SizeExceeded,
    InvalidArgument,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every computation error raised by the library carries one of the codes above;
/// the CLI prints errc_name() so failures are greppable.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

   private:
    Errc code_;
};

}  // namespace finsep
