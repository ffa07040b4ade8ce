#pragma once

// JSON reading and writing for points, matroids, valuated matroids, weighted
// complexes and recognition reports. Rationals are strings "p/q" or integer
// strings; elements are 1-indexed. Schema violations throw InvalidInput.

#include <string_view>

#include "json.hpp"
#include "tropcvx/complex.hpp"
#include "tropcvx/matroid.hpp"
#include "tropcvx/recognizer.hpp"
#include "tropcvx/trop_point.hpp"
#include "tropcvx/valuated.hpp"

namespace tropcvx::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; malformed text throws InvalidInput.
Json parse(std::string_view text);
/// Reads and parses a file; unreadable files throw InvalidInput.
Json read_file(const std::string& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

/// Array of rational strings, canonicalized on read.
TropPoint point_from_json(const Json& j);
Json to_json(const TropPoint& p);
/// Comma-separated rationals, e.g. "0,-1,1/2".
TropPoint parse_point(std::string_view text);

/// A direction modulo (1,...,1) given in reduced coordinates, written with
/// first entry 0.
Json direction_to_json(const Vec& reduced);

ElementSet set_from_json(const Json& j, std::size_t n);
Json to_json(ElementSet s);

/// {"n": 3, "bases": [[1,2],[1,3],[2,3]]}
Matroid matroid_from_json(const Json& j);
Json to_json(const Matroid& m);

/// Matroid JSON plus an optional "weights" object keyed "1,2"; without it the
/// valuation is trivial.
ValuatedMatroid valuated_from_json(const Json& j);
Json to_json(const ValuatedMatroid& v);

/// {"n": 3, "cells": [{"vertices": [...], "rays": [...], "lineality": [...],
/// "weight": 1}, ...]} listing the maximal cells. Rays and lineality are
/// directions in R^n modulo (1,...,1).
WeightedComplex complex_from_json(const Json& j);
Json to_json(const WeightedComplex& x);

Json to_json(const Reason& r);
/// {"verdict", "matroid", "reason", "multiplier", "flats", "chain_cones"}
Json to_json(const RecognitionReport& r);

}  // namespace tropcvx::io
