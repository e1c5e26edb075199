#pragma once

// Umbrella header for the Grassmann-Berezin pentagon verifier.

#include "berezin/gaussian.hpp"
#include "berezin/generators.hpp"
#include "berezin/grassmann.hpp"
#include "berezin/multipoly.hpp"
#include "berezin/pentagon.hpp"
#include "berezin/primefield.hpp"
#include "berezin/rational.hpp"
#include "berezin/render.hpp"
#include "berezin/rings.hpp"
#include "berezin/scalar.hpp"
#include "berezin/weights.hpp"
