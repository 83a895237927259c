#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cores/cores.hpp"

namespace cores::text {

// Machine formats: partition "6,6,2,1" (empty string for the empty
// partition), s-set "[-4,-2,2,5,9]" sorted ascending, s-point "(-4,-2,2,5,9)"
// in coordinate order, word "0 2 1 0".

std::string format(const Partition& p);
std::string format(const SSet& q);
std::string format(const SPoint& p);
std::string format(const Word& w);

Partition parse_partition(std::string_view text);
SSet parse_s_set(std::string_view text);
SPoint parse_s_point(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace cores::text
