#ifndef TLMP_IO_HPP
#define TLMP_IO_HPP

#include "tlmp/wells.hpp"

#include <json.hpp>

namespace tlmp {

using json = nlohmann::json;

// Rationals are written as strings "p" or "p/q"; reading also takes JSON
// integers.  All parse failures throw InputError (DimensionError for shapes).
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t len);
// row-major nested arrays; [] is any matrix with no rows
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
Matrix matrix_from_json(const json& j); // shape from the data

json to_json(const ThreeLie& g);
ThreeLie algebra_from_json(const json& j);
json to_json(const MatchedPair& p);
MatchedPair pair_from_json(const json& j);
json to_json(const MPRepresentation& r);
MPRepresentation representation_from_json(const json& j, const MatchedPair& p);

// cochains carry their shape: "dims": {"g","h","V","W"}
json to_json(const Cochain1& c);
Cochain1 cochain1_from_json(const json& j);
json to_json(const Cochain2& c);
Cochain2 cochain2_from_json(const json& j);
// checks the cochain's shape against (p, r)
void check_cochain_dims(const Cochain2& c, const MatchedPair& p, const MPRepresentation& r);

json to_json(const AbelianExtension& e);
AbelianExtension extension_from_json(const json& j);
json to_json(const Section& s);
Section section_from_json(const json& j, const AbelianExtension& e);
json to_json(const AutPair& a);
AutPair aut_pair_from_json(const json& j, const AbelianExtension& e);
json to_json(const TotalAut& u);
TotalAut total_aut_from_json(const json& j, const AbelianExtension& e);

json to_json(const Report& r);
json to_json(const WellsClass& w);
json to_json(const Inducibility& d);
json to_json(const ExactSequenceReport& r);
json to_json(const Subspace& s);

// {"kind": ..., "payload": ..., "meta": ...}
struct Bundle {
    std::string kind;
    json payload;
    std::string meta;
};
const std::vector<std::string>& bundle_kinds();
json make_bundle(const std::string& kind, json payload, const std::string& meta = {});
Bundle bundle_from_json(const json& j);
Bundle read_bundle(const std::string& path);
// payload of a bundle of the given kind, else InputError
json expect(const Bundle& b, const std::string& kind);

// canonical text: sorted keys, two-space indent, trailing newline
std::string dump(const json& j);

} // namespace tlmp

#endif
