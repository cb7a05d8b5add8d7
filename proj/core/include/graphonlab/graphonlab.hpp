#pragma once

#include "graphonlab/catalog.hpp"
#include "graphonlab/edgedist.hpp"
#include "graphonlab/error.hpp"
#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/homomorphism.hpp"
#include "graphonlab/io.hpp"
#include "graphonlab/options.hpp"
#include "graphonlab/pmf.hpp"
#include "graphonlab/rng.hpp"
#include "graphonlab/sampler.hpp"
#include "graphonlab/scalar.hpp"
#include "graphonlab/verifier.hpp"
