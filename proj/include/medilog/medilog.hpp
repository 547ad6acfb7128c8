#pragma once

#include "medilog/algebra.hpp"
#include "medilog/cases.hpp"
#include "medilog/checker.hpp"
#include "medilog/error.hpp"
#include "medilog/formula.hpp"
#include "medilog/fusion.hpp"
#include "medilog/io.hpp"
#include "medilog/mediative.hpp"
#include "medilog/pipeline.hpp"
#include "medilog/qmfl.hpp"
#include "medilog/type2.hpp"
#include "medilog/type3.hpp"
