#pragma once

#include "ncpoisson/errors.hpp"
#include "ncpoisson/scalar.hpp"
#include "ncpoisson/linalg.hpp"
#include "ncpoisson/law_report.hpp"
#include "ncpoisson/bilinear.hpp"
#include "ncpoisson/algebra.hpp"
#include "ncpoisson/representation.hpp"
#include "ncpoisson/tensor.hpp"
#include "ncpoisson/yang_baxter.hpp"
#include "ncpoisson/bialgebra.hpp"
#include "ncpoisson/cohomology.hpp"
#include "ncpoisson/operators.hpp"
#include "ncpoisson/manifest.hpp"
#include "ncpoisson/acceptance.hpp"
#include "ncpoisson/commands.hpp"
