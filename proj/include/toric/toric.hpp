#ifndef TORIC_TORIC_HPP
#define TORIC_TORIC_HPP

#include "toric/classify.hpp"
#include "toric/cone.hpp"
#include "toric/exact_angle.hpp"
#include "toric/fourmanifold.hpp"
#include "toric/plumbing.hpp"
#include "toric/render.hpp"

#endif // TORIC_TORIC_HPP
