#ifndef POLYCUP_POLYCUP_HPP
#define POLYCUP_POLYCUP_HPP

#include "polycup/error.hpp"
#include "polycup/complex.hpp"
#include "polycup/forms.hpp"
#include "polycup/wedge.hpp"
#include "polycup/whitney.hpp"
#include "polycup/cohomology.hpp"
#include "polycup/meshio.hpp"
#include "polycup/generate.hpp"
#include "polycup/verify.hpp"

#endif  // POLYCUP_POLYCUP_HPP
