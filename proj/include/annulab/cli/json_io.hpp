#pragma once

// Problem documents: exact values travel as strings ("a/b", "inf", "-inf").

#include "annulab/annuli.hpp"
#include "annulab/cochains.hpp"
#include "annulab/newton.hpp"
#include "annulab/residues.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace annulab::cli {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Throws std::invalid_argument naming the offending field.
Rational rational_field(const json& j, const std::string& what);
/// "inf" / null map to std::nullopt.
std::optional<Rational> extended_field(const json& j, const std::string& what);

struct Problem {
  std::int64_t p = 2;
  std::optional<Annulus> annulus;
  std::optional<NewtonData> newton;
  std::optional<LaurentExt> laurent;
  std::optional<SemiGraph> semigraph;
  json params = json::object();
};

/// Checks the schema version and every present section.
Problem parse_problem(const json& doc);
Annulus parse_annulus(const json& j);
NewtonData parse_newton(const json& j);
LaurentExt parse_laurent(const json& j, std::int64_t p);
SemiGraph parse_semigraph(const json& j);

const json& require(const json& obj, const std::string& key);

json to_json(const Rational& q);
json to_json(const LogMag& m);
json to_json(const LogInterval& I);
json to_json(const Annulus& A);
json to_json(const NewtonData& nd);
json to_json(const Cochain& c);

}  // namespace annulab::cli
