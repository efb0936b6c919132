#pragma once

#include "matrix.hpp"
#include "eigen.hpp"
#include "subspace.hpp"
#include "quaternion.hpp"
#include "symmetry.hpp"
#include "catalog.hpp"
#include "cartan.hpp"
#include "fingerprint.hpp"
#include "random.hpp"
#include "spectra.hpp"
#include "roots.hpp"
#include "spec_json.hpp"
