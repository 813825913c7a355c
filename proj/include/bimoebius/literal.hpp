#pragma once

#include <string>
#include <string_view>

#include "bimoebius/extended.hpp"

// ASCII literal syntax shared by the CLI flags and JSON string fields.
//
//   literal    := cartesian | idempotent
//   idempotent := "[" extcomplex "," extcomplex "]"
//   extcomplex := "inf" | complex
//   complex    := ["+"|"-"] term { ("+"|"-") term }
//   term       := number ["i"] | "i"
//   cartesian  := ["+"|"-"] cterm { ("+"|"-") cterm }
//   cterm      := number [unit] | unit        unit := "i1" | "i2" | "j"
//   number     := digits ["." digits] [("e"|"E") ["+"|"-"] digits]
//
// Whitespace between tokens is insignificant and repeated units accumulate
// additively.  "inf" is accepted only as a whole idempotent component.
// Inside brackets plain "i" denotes i1; only the idempotent form can carry
// infinities.

namespace bimo {

enum class LiteralStyle { Cartesian, Idempotent };

ExtendedBicomplex parse_literal(std::string_view text);

// Canonical rendering: shortest round-trip numbers, zero imaginary parts
// omitted, "inf" for infinite components.  Cartesian style rejects
// infinite elements.
std::string format_literal(const ExtendedBicomplex& w,
                           LiteralStyle style = LiteralStyle::Idempotent);
std::string format_literal(const Bicomplex& w,
                           LiteralStyle style = LiteralStyle::Idempotent);

std::string format_double(double value);
std::string format_complex(Complex value);

}  // namespace bimo
