#ifndef BIMODKIT_JSON_IO_HPP
#define BIMODKIT_JSON_IO_HPP

#include <string>

#include "bimodkit/cohomology.hpp"
#include "bimodkit/varieties.hpp"

namespace bimodkit {

/// JSON formats (stable, keys sorted, deterministic output):
///   matrix    {"p":int,"rows":int,"cols":int,"entries":[int,...]}  row-major
///   algebra   {"kind":"truncated","p":int,"exponents":[...],"vars":[...]}
///             {"kind":"group","p":int,"orders":[...]}
///             {"kind":"table","p":int,"basis_labels":[...],"mult_table":...,
///              "unit_index":int,"generators":[...],"augmentation":[...],
///              "relations":[...]}
///   module    {"algebra":<algebra or path string>,"dim":int,
///              "actions":{"w1":matrix,...}}
///   bimodule  module fields over the enveloping algebra plus
///             {"base":<algebra>,"split":{"u":[...],"v":[...]}}
///   variety   {"p":int,"ambient":int,"points":[[...],...]}  sorted
/// A "group" algebra is presented to modules through its truncated
/// polynomial form (w_i = g_i - 1); actions are keyed by the w labels.

std::string matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const std::string& text);

std::string algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const std::string& text);

std::string hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const std::string& text);

/// base_dir resolves a string-valued "algebra" reference to a file.
std::string module_to_json(const Module& m);
Module module_from_json(const std::string& text, const std::string& base_dir = ".");

std::string bimodule_to_json(const Bimodule& b);
Bimodule bimodule_from_json(const std::string& text, const std::string& base_dir = ".");

std::string variety_to_json(const RankVariety& v);
RankVariety variety_from_json(const std::string& text);

std::string dims_to_json(const GradedDims& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bimodkit

#endif
