#ifndef OPERADIC_OPERADIC_HPP
#define OPERADIC_OPERADIC_HPP

#include "operadic/bigint.hpp"
#include "operadic/canonical.hpp"
#include "operadic/catalog.hpp"
#include "operadic/freealg.hpp"
#include "operadic/json_io.hpp"
#include "operadic/linalg.hpp"
#include "operadic/presentation.hpp"
#include "operadic/rational.hpp"
#include "operadic/transform.hpp"
#include "operadic/unit_action.hpp"

#endif
