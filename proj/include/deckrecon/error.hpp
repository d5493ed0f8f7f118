#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deckrecon {

enum class Errc {
  MalformedEncoding,
  OrderTooLarge,
  InvalidArgument,
  CardNotFound,
  MalformedFile,
  WrongCardCount,
  MixedOrders,
  UnsupportedOrder,
  AmbiguousDegreeSequence,
  InconsistentDeck,
  NegativeDegree,
  NonDivisible,
  IdentificationAmbiguous,
  InternalContradiction,
  TooLarge,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedEncoding: return "MalformedEncoding";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CardNotFound: return "CardNotFound";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::WrongCardCount: return "WrongCardCount";
    case Errc::MixedOrders: return "MixedOrders";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::AmbiguousDegreeSequence: return "AmbiguousDegreeSequence";
    case Errc::InconsistentDeck: return "InconsistentDeck";
    case Errc::NegativeDegree: return "NegativeDegree";
    case Errc::NonDivisible: return "NonDivisible";
    case Errc::IdentificationAmbiguous: return "IdentificationAmbiguous";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it without parsing messages.
class ReconError : public std::runtime_error {
 public:
  ReconError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw ReconError(code, what);
}

}  // namespace deckrecon
