#pragma once

#include "cinf/automaton.hpp"
#include "cinf/derivative.hpp"
#include "cinf/errors.hpp"
#include "cinf/forbidden.hpp"
#include "cinf/repetitions.hpp"
#include "cinf/vertical.hpp"
#include "cinf/word.hpp"
