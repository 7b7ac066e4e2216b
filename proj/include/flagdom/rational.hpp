#pragma once

#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "flagdom/rootsys.hpp"

namespace flagdom {

using Rational = boost::rational<Int>;

// "3", "-1/2", "+2/4" (normalized on read).
Rational parse_rational(std::string_view text);
// "1/2", "-3", "0"
std::string format_rational(const Rational& r);

}  // namespace flagdom
