#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace seidel {

// All spectral arithmetic is exact; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline int sign_of(const Int& x) { return x.sign(); }

inline int sign_of(const Rat& x) { return x.numerator().sign(); }

} // namespace seidel
