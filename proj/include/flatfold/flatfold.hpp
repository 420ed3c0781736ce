#pragma once

#include "flatfold/core.hpp"
#include "flatfold/crease_pattern.hpp"
#include "flatfold/oracle.hpp"
#include "flatfold/pattern.hpp"
#include "flatfold/vertex.hpp"
#include "flatfold/corpus.hpp"
#include "flatfold/io.hpp"
#include "flatfold/report.hpp"
