#pragma once

// Umbrella header.

#include "kleinian/core.hpp"
#include "kleinian/mobius.hpp"
#include "kleinian/chebyshev.hpp"
#include "kleinian/characters.hpp"
#include "kleinian/recursions.hpp"
#include "kleinian/sympoly.hpp"
#include "kleinian/inequalities.hpp"
#include "kleinian/oracle.hpp"
#include "kleinian/catalog.hpp"
#include "kleinian/scan.hpp"
#include "kleinian/parse.hpp"
#include "kleinian/serialize.hpp"
