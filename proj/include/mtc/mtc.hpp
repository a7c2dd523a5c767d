#ifndef MTC_MTC_HPP
#define MTC_MTC_HPP

// Umbrella header: modular data in, Picard group, Schellekens algebras,
// torus partition functions and boundary spectra out.

#include "mtc/abelian.hpp"
#include "mtc/bihom.hpp"
#include "mtc/boundary.hpp"
#include "mtc/builtins.hpp"
#include "mtc/complex_approx.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/errors.hpp"
#include "mtc/fusion.hpp"
#include "mtc/io.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/picard.hpp"
#include "mtc/rational.hpp"
#include "mtc/report.hpp"
#include "mtc/root_of_unity.hpp"
#include "mtc/schellekens.hpp"
#include "mtc/torus.hpp"

#endif
