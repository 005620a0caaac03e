#pragma once

#include "golod/corpus.hpp"
#include "golod/error.hpp"
#include "golod/field.hpp"
#include "golod/golod_cert.hpp"
#include "golod/homology.hpp"
#include "golod/ideal.hpp"
#include "golod/moment_angle.hpp"
#include "golod/monomial.hpp"
#include "golod/simplicial.hpp"
