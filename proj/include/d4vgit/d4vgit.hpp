#pragma once

// Everything.
#include "d4vgit/charts.hpp"
#include "d4vgit/equations.hpp"
#include "d4vgit/errors.hpp"
#include "d4vgit/field.hpp"
#include "d4vgit/git.hpp"
#include "d4vgit/json_io.hpp"
#include "d4vgit/linalg.hpp"
#include "d4vgit/orbit.hpp"
#include "d4vgit/poly.hpp"
#include "d4vgit/quiver.hpp"
#include "d4vgit/random.hpp"
#include "d4vgit/s3.hpp"
#include "d4vgit/samples.hpp"
#include "d4vgit/stability.hpp"
#include "d4vgit/suite.hpp"
#include "d4vgit/toric.hpp"
