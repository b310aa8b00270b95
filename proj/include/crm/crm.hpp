#pragma once

#include "crm/artinian.hpp"
#include "crm/betti.hpp"
#include "crm/cohomology.hpp"
#include "crm/constructions.hpp"
#include "crm/errors.hpp"
#include "crm/field.hpp"
#include "crm/hilbert.hpp"
#include "crm/hom.hpp"
#include "crm/io.hpp"
#include "crm/matrix.hpp"
#include "crm/monomial.hpp"
#include "crm/pencil.hpp"
#include "crm/presentation.hpp"
#include "crm/rankcheck.hpp"
#include "crm/reduction.hpp"
#include "crm/rng.hpp"
#include "crm/skew_example.hpp"
#include "crm/tree.hpp"
#include "crm/window.hpp"
