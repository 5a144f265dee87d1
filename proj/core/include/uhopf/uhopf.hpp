#pragma once

#include "uhopf/numth.hpp"
#include "uhopf/rng.hpp"
#include "uhopf/cmatrix.hpp"
#include "uhopf/hopf.hpp"
#include "uhopf/action.hpp"
#include "uhopf/effectiveness.hpp"
#include "uhopf/oracle.hpp"
#include "uhopf/serialize.hpp"
