#pragma once

// JSON renderings shared by the C API and the command-line tool. Every
// top-level document carries "schema": 1.

#include "json.hpp"

#include "gausscong/gauss.hpp"
#include "gausscong/series.hpp"
#include "gausscong/theory.hpp"

namespace gausscong {

inline constexpr int kSchemaVersion = 1;

nlohmann::json exponent_json(const ExponentVector& k);

nlohmann::json ratfun_json(const RationalFunction& f);
nlohmann::json series_json(const TruncatedLaurentSeries& s);
nlohmann::json gauss_json(const GaussReport& r);
nlohmann::json minton_json(const MintonVerdict& v);
nlohmann::json mostly_linear_json(const MostlyLinearVerdict& v);
nlohmann::json degree2_json(const Degree2Classification& c);
nlohmann::json linear_json(bool verdict);
nlohmann::json faces_json(const NewtonPolytope& np, const std::vector<Face>& fs);

}  // namespace gausscong
