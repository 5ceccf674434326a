#include "folres/rational.hpp"

#include <cctype>

#include "folres/error.hpp"

namespace folres {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::EulerConditionFailed: return "EulerConditionFailed";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::OrderExceedsTruncation: return "OrderExceedsTruncation";
    case ErrorCode::PoleOrderOverflow: return "PoleOrderOverflow";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::NoGenericPointFound: return "NoGenericPointFound";
    case ErrorCode::UserPointRequired: return "UserPointRequired";
    case ErrorCode::NewtonBreakdown: return "NewtonBreakdown";
    case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorCode::NoTransversePlaneFound: return "NoTransversePlaneFound";
    case ErrorCode::ChartMissesComponent: return "ChartMissesComponent";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::CofactorIdentityFailed: return "CofactorIdentityFailed";
    case ErrorCode::SaitoIdentityFailed: return "SaitoIdentityFailed";
    case ErrorCode::SaitoCoprimalityFailed: return "SaitoCoprimalityFailed";
    case ErrorCode::ComponentNotSingular: return "ComponentNotSingular";
    case ErrorCode::DegenerateLinearPart: return "DegenerateLinearPart";
    case ErrorCode::MismatchedComponent: return "MismatchedComponent";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::VariableMismatch:
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidPresentation:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::EulerConditionFailed:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  Rational value(to_integer(num_text));
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
    }
    const Integer den = to_integer(den_text);
    if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    value /= Rational(den);
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace folres
