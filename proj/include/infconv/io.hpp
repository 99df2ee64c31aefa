#pragma once

#include <json.hpp>

#include <string>

#include "infconv/convexcone.hpp"
#include "infconv/katetov.hpp"
#include "infconv/magma.hpp"
#include "infconv/zline.hpp"

namespace infconv {

using json = nlohmann::ordered_json;

// All loaders throw ParseError for malformed JSON/unknown shapes and
// InvariantViolation when the parsed object violates a domain invariant;
// messages carry the `where` tag (usually the file path) plus the field.
json load_json(const std::string& path);

FiniteMetricMagma magma_from_json(const json& j, const std::string& where);
FiniteMetricMagma load_magma(const std::string& path);
json magma_to_json(const FiniteMetricMagma& m);

FnOnX fn_from_json(const json& j, const std::string& where);
FnOnX load_fn(const std::string& path);
json fn_to_json(const FnOnX& f);

SubspaceFn subspace_from_json(const json& j, const std::string& where);
SubspaceFn load_subspace(const std::string& path);
json subspace_to_json(const SubspaceFn& sf);

CyclicSeq cyclic_from_json(const json& j, const std::string& where);
CyclicSeq load_cyclic(const std::string& path);
json cyclic_to_json(const CyclicSeq& u);

CofiniteSeq cofinite_from_json(const json& j, const std::string& where);
CofiniteSeq load_cofinite(const std::string& path);
json cofinite_to_json(const CofiniteSeq& u);

PLKatetovFn pl_from_json(const json& j, const std::string& where);
PLKatetovFn load_pl(const std::string& path);
json pl_to_json(const PLKatetovFn& f);

}  // namespace infconv
