#ifndef SUPERCOH_SUPERCOH_HPP
#define SUPERCOH_SUPERCOH_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/cohomology.hpp>
#include <supercoh/differential.hpp>
#include <supercoh/formulas.hpp>
#include <supercoh/io.hpp>
#include <supercoh/linalg.hpp>
#include <supercoh/superexterior.hpp>
#include <supercoh/verify.hpp>

#endif
