#pragma once

#include "dinf/field/field.hpp"
#include "dinf/laurent.hpp"
#include "dinf/algebra.hpp"
#include "dinf/classify.hpp"
#include "dinf/expr.hpp"
#include "dinf/serialize.hpp"
#include "dinf/cli.hpp"
