#ifndef SUPERQYBE_SUPERQYBE_HPP
#define SUPERQYBE_SUPERQYBE_HPP

#include "superqybe/errors.hpp"
#include "superqybe/fermion.hpp"
#include "superqybe/intertwine.hpp"
#include "superqybe/qdeform.hpp"
#include "superqybe/report.hpp"
#include "superqybe/repr.hpp"
#include "superqybe/rmatrix.hpp"
#include "superqybe/superlinalg.hpp"

#endif
