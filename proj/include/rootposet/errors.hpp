#pragma once

#include <stdexcept>
#include <string>

namespace rootposet {

// Base class for all precondition violations raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ROOTPOSET_DEFINE_ERROR(Name)       \
  struct Name : Error {                    \
    using Error::Error;                    \
  }

ROOTPOSET_DEFINE_ERROR(InvalidSpec);       // family/rank outside the allowed bounds
ROOTPOSET_DEFINE_ERROR(RootNotInSystem);   // a coefficient vector that is not a positive root
ROOTPOSET_DEFINE_ERROR(NotAnIdeal);        // a member set that is not up-closed
ROOTPOSET_DEFINE_ERROR(BudgetExceeded);    // enumeration exceeded the configured budget
ROOTPOSET_DEFINE_ERROR(NotAbelian);
ROOTPOSET_DEFINE_ERROR(EmptyIdeal);
ROOTPOSET_DEFINE_ERROR(NotLongRoot);
ROOTPOSET_DEFINE_ERROR(NotCommutative);
ROOTPOSET_DEFINE_ERROR(NotAdjacent);
ROOTPOSET_DEFINE_ERROR(NotLong);
ROOTPOSET_DEFINE_ERROR(NotGlorious);
ROOTPOSET_DEFINE_ERROR(NotAPath);
ROOTPOSET_DEFINE_ERROR(SimplyLaced);       // semi-glorious pair requested in a simply laced system
ROOTPOSET_DEFINE_ERROR(NotDEType);
ROOTPOSET_DEFINE_ERROR(TypeAUnsupported);  // operation whose defining roots vanish in type A
ROOTPOSET_DEFINE_ERROR(NotGloriousEdge);

#undef ROOTPOSET_DEFINE_ERROR

}  // namespace rootposet
