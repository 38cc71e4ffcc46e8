#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qweb {

// Exact rational scalars. Everything downstream is built over these;
// no floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Rat rat_parse(const std::string& s) { return Rat(s); }

} // namespace qweb
