#pragma once

#include "ditri/cone.hpp"
#include "ditri/error.hpp"
#include "ditri/finite_set.hpp"
#include "ditri/group.hpp"
#include "ditri/identities.hpp"
#include "ditri/io.hpp"
#include "ditri/lattice.hpp"
#include "ditri/line.hpp"
#include "ditri/linalg.hpp"
#include "ditri/oracle.hpp"
#include "ditri/product.hpp"
#include "ditri/quotient.hpp"
#include "ditri/rational.hpp"
#include "ditri/simplex.hpp"
#include "ditri/stream.hpp"
#include "ditri/xi.hpp"
