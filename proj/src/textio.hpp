#ifndef CHOWOPS_TEXTIO_HPP
#define CHOWOPS_TEXTIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "charclass.hpp"
#include "dual.hpp"
#include "graded.hpp"
#include "steenrod.hpp"

namespace chowops {

// Canonical text forms. Operation elements render as e.g.
// "2*P2 + P3.P1" (odd p) or "t*Sq3.Sq1" (p = 2); the zero element is
// "0". All parsers report the byte position of the first offending
// token.

std::string to_text(const OpMonomial& m);
std::string to_text(const SteenrodElement& e);
std::string to_text(const DualMonomial& m);
std::string to_text(const CoactionElement& e);
std::string to_text(const QuadricClass& x);
std::string to_text(const ProjClass& x);
std::string to_text(const TruncSeries& s);
std::string to_text(const VirtualBundleSpec& spec);

SteenrodElement parse_steenrod(const std::string& expr, const Prime& p, Mode mode);
DualMonomial parse_dual_monomial(const std::string& expr, const Prime& p);
QuadricClass parse_quadric_class(const std::string& expr, const QuadricRing& ring);
ProjClass parse_proj_class(const std::string& expr, const ProjSpaceRing& ring);
VirtualBundleSpec parse_bundle_spec(const std::string& expr);

/// One additive term of a (possibly formal) polynomial in u and v.
/// u_exp may exceed 1: "u*u" is kept formal so the coaction of the
/// square can be evaluated in the target ring.
struct BmuMonomialTerm {
    long long coeff = 1;
    int u_exp = 0;
    int v_exp = 0;
};

std::vector<BmuMonomialTerm> parse_bmu_terms(const std::string& expr);

/// Sum of coeff * coaction(u)^u_exp * coaction(v)^v_exp.
CoactionElement evaluate_coaction(const std::vector<BmuMonomialTerm>& terms, const Prime& p,
                                  int truncation);

// Structured record forms, round-trip stable.

nlohmann::json to_json(const SteenrodElement& e);
SteenrodElement steenrod_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DualMonomial& m);
DualMonomial dual_monomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoactionElement& e);
CoactionElement coaction_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadricClass& x);
QuadricClass quadric_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProjClass& x);
ProjClass proj_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VirtualBundleSpec& spec);
VirtualBundleSpec bundle_spec_from_json(const nlohmann::json& j);

}  // namespace chowops

#endif
