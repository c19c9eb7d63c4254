#include "finsep/errors.hpp"

namespace finsep {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BothZero: return "BothZero";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DenominatorVanishes: return "DenominatorVanishes";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::BadPrime: return "BadPrime";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::InseparableInput: return "InseparableInput";
        case Errc::SizeExceeded: return "SizeExceeded";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace finsep
