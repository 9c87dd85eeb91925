#pragma once

#include "wgc/binary_matrix.hpp"
#include "wgc/binary_poly.hpp"
#include "wgc/block_codes.hpp"
#include "wgc/bounds.hpp"
#include "wgc/canonical_form.hpp"
#include "wgc/convolutional.hpp"
#include "wgc/hypergraph.hpp"
#include "wgc/poly_matrix.hpp"
#include "wgc/woven.hpp"
