#pragma once

#include "metaplectic/errors.hpp"
#include "metaplectic/exactnum.hpp"
#include "metaplectic/sl3group.hpp"
#include "metaplectic/blockform.hpp"
#include "metaplectic/cocycle.hpp"
#include "metaplectic/splitting.hpp"
#include "metaplectic/cosets.hpp"
#include "metaplectic/sampling.hpp"
#include "metaplectic/io.hpp"
#include "metaplectic/verify.hpp"
