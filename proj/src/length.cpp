#include "fds/length.hpp"

#include <cctype>

#include "fds/error.hpp"

namespace fds {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "ParseError";
    case Errc::Schema: return "SchemaError";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::EdgeNotShortest: return "EdgeNotShortest";
    case Errc::NegativeLength: return "NegativeLength";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::InvalidOffset: return "InvalidOffset";
    case Errc::BadRoute: return "BadRoute";
    case Errc::PositionNotOnRoute: return "PositionNotOnRoute";
    case Errc::NoStops: return "NoStops";
    case Errc::InfeasiblePlan: return "InfeasiblePlan";
    case Errc::EdgeOnRoute: return "EdgeOnRoute";
    case Errc::EdgeNotCandidate: return "EdgeNotCandidate";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::UncoverableRoute: return "UncoverableRoute";
    case Errc::Infeasible: return "Infeasible";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Error";
}

Length parse_length(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  std::string digits;
  std::size_t frac = 0;
  bool dot = false;
  for (char c : body) {
    if (c == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (dot) ++frac;
    } else {
      throw Error(Errc::Parse, "not a decimal number: '" + std::string(s) + "'");
    }
  }
  if (digits.empty() || (dot && frac == 0) || body.front() == '.')
    throw Error(Errc::Parse, "not a decimal number: '" + std::string(s) + "'");
  // cpp_int reads a leading 0 as an octal prefix.
  std::size_t nz = digits.find_first_not_of('0');
  boost::multiprecision::cpp_int num(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t i = 0; i < frac; ++i) den *= 10;
  Length v(num, den);
  return neg ? Length(-v) : v;
}

std::string to_decimal(const Length& x) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  // Scale by powers of ten until the denominator divides out.
  cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) throw Error(Errc::Parse, "value has no finite decimal form");
  int k = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  cpp_int scaled = num * (scale / den);
  std::string s = scaled.str();
  if (k > 0) {
    if (static_cast<int>(s.size()) <= k) s.insert(0, std::string(k - s.size() + 1, '0'));
    s.insert(s.size() - k, ".");
  }
  return (neg && scaled != 0) ? "-" + s : s;
}

}  // namespace fds
