// Sequence literals:
//   forward  WORD? "(" WORD ")#"        e.g. 1(2)#, (*12)#
//   backward "#(" WORD ")" WORD?        e.g. #(2112)2111
//   two-sided BACK "." FORWARD          e.g. #(1)*.(112*)#

#ifndef ITIN_LITERAL_HPP_
#define ITIN_LITERAL_HPP_

#include <string_view>
#include <variant>

#include "itin/backward.hpp"
#include "itin/forward.hpp"

namespace itin {

using Literal = std::variant<ForwardSeq, BackSeq, BiSeq>;

ForwardSeq parse_forward(std::string_view s);
BackSeq parse_back(std::string_view s);
BiSeq parse_biseq(std::string_view s);
KneadingSeq parse_kneading(std::string_view s);

// Dispatches on the shape of s.
Literal parse_literal(std::string_view s);

std::string to_string(const Literal& v);

}  // namespace itin

#endif  // ITIN_LITERAL_HPP_
