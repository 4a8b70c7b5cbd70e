#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "willsym/loopalg.hpp"
#include "willsym/potentials.hpp"

namespace willsym {

using Json = nlohmann::json;

/// Scalar text format: a rational `p/q`, a Gaussian rational `a+bi`, or the
/// adjoined-surd form `(a+bi)+(c+di)*sqrt(d)`.  Round-trips bit-exactly.
std::string format_scalar(const SurdScalar& s);
SurdScalar parse_scalar(const std::string& text);

/// Rational-map text format: `num: [c0, c1, ...] den: [d0, ...]`.
std::string format_map(const RationalMapX& f);
RationalMapX parse_map(const std::string& text);

/// Structured potential file with sections [quadruple], [symmetry],
/// [weierstrass]; `#` starts a comment line.
struct PotentialFile {
    std::optional<IsotropicQuadruple<SurdScalar>> quadruple;
    std::optional<SymmetrySpec<SurdScalar>> symmetry;
    std::optional<WeierstrassData<SurdScalar>> weierstrass;
};

PotentialFile parse_potential_text(const std::string& text);
PotentialFile read_potential_file(const std::string& path);
std::string format_potential_text(const PotentialFile& file);
void write_potential_file(const std::string& path, const PotentialFile& file);

/// LaurentMatrix JSON: { "size": n, "terms": { "k": [[...row-major...]] } },
/// complex entries as [re, im] pairs.
Json laurent_to_json(const LaurentMatrix& a);
LaurentMatrix laurent_from_json(const Json& j);

}  // namespace willsym
