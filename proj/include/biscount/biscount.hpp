#pragma once

#include "biscount/bigraph.hpp"
#include "biscount/contracting.hpp"
#include "biscount/dsampler.hpp"
#include "biscount/engine.hpp"
#include "biscount/error.hpp"
#include "biscount/generate.hpp"
#include "biscount/graph_io.hpp"
#include "biscount/oracle.hpp"
#include "biscount/rational.hpp"
#include "biscount/report.hpp"
#include "biscount/spectral.hpp"
#include "biscount/vertex_set.hpp"
