#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace orbitkit
