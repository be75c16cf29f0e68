#include "sympcoh/numeric.hpp"

#include <ostream>

namespace sympcoh {

std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.raw(); }

std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

}  // namespace sympcoh
