#pragma once
// Umbrella header.

#include "qperc/algebra.hpp"
#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/extremal.hpp"
#include "qperc/hamming.hpp"
#include "qperc/io.hpp"
#include "qperc/norms.hpp"
#include "qperc/oracle.hpp"
#include "qperc/verify.hpp"
#include "qperc/vertex_set.hpp"
