#pragma once

#include "goi/category.hpp"
#include "goi/error.hpp"
#include "goi/format.hpp"
#include "goi/graph.hpp"
#include "goi/graph_io.hpp"
#include "goi/logic/cut_elim.hpp"
#include "goi/logic/formula.hpp"
#include "goi/logic/generate.hpp"
#include "goi/logic/proof.hpp"
#include "goi/logic/switching.hpp"
#include "goi/matrix.hpp"
#include "goi/measure.hpp"
#include "goi/paths.hpp"
#include "goi/project.hpp"
#include "goi/random.hpp"
#include "goi/truth.hpp"
#include "goi/verify.hpp"
