#pragma once

#include "endok/errors.hpp"
#include "endok/field.hpp"
#include "endok/matrix.hpp"
#include "endok/subspace.hpp"
#include "endok/poly.hpp"
#include "endok/random.hpp"
#include "endok/algebra.hpp"
#include "endok/quiver.hpp"
#include "endok/module.hpp"
#include "endok/structure.hpp"
#include "endok/idempotents.hpp"
#include "endok/projectives.hpp"
#include "endok/resolution.hpp"
#include "endok/verdict.hpp"
#include "endok/homalg.hpp"
#include "endok/endomorphism.hpp"
#include "endok/iso.hpp"
#include "endok/families.hpp"
#include "endok/ktheory.hpp"
#include "endok/strat.hpp"
#include "endok/spec_io.hpp"
#include "endok/report.hpp"
#include "endok/commands.hpp"
