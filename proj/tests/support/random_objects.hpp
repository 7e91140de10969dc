#pragma once

// Tests draw from the same seeded generators the verification suites use.
#include "mot2/sampling.hpp"

namespace gen = mot2::sampling;
