#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ncsf {

// Exact rational scalar. mpq_class is always kept canonical by GMP.
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return a.get_num() == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Rat rat_from_string(const std::string& s)
{
    Rat r(s);
    r.canonicalize();
    return r;
}

// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rat& a)
{
    if (is_integer(a)) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

} // namespace ncsf
