#ifndef DRGSPEC_DRGSPEC_HPP
#define DRGSPEC_DRGSPEC_HPP

// Umbrella header. report.hpp is left out because it pulls in nlohmann/json.

#include "drgspec/errors.hpp"
#include "drgspec/excess.hpp"
#include "drgspec/generators.hpp"
#include "drgspec/graph.hpp"
#include "drgspec/orthopoly.hpp"
#include "drgspec/polynomial.hpp"
#include "drgspec/spectrum.hpp"
#include "drgspec/sym_matrix.hpp"

#endif // DRGSPEC_DRGSPEC_HPP
