// Built-in catalog of theta-function identities.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "theta/identity.hpp"

namespace theta {

class UnknownIdentityError : public std::runtime_error {
public:
    explicit UnknownIdentityError(const std::string& id)
        : std::runtime_error("unknown identity id '" + id + "'"), id_(id)
    {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

/// Every identity, parsed from its DSL text. Ids are stable across releases:
/// B.I.*, B.II.* bilinear; W.* Weierstrass; J.* Jacobi; R.* Riemann;
/// P.* bilinear specialisations; L.* Landen; AD.* two-variable addition;
/// D.* duplication; TC.* theta constants; G.g1 Gauss's product.
const std::vector<Identity>& builtin_catalog();

const Identity& find_identity(std::string_view id);

/// Ids whose text starts with `prefix` ("B.I." selects the first bilinear system).
std::vector<std::string> ids_with_prefix(std::string_view prefix);

/// One equation label of the source collection and where it lives in the
/// catalog. Labels that are not identities (variable maps, notation) carry
/// a note instead of ids.
struct ManifestEntry {
    std::string label;
    std::vector<std::string> ids;
    std::string note;
};

const std::vector<ManifestEntry>& catalog_manifest();

/// "ID<TAB>DSL<TAB>label" per line, catalog order, trailing newline.
std::string catalog_tsv();

/// Inverse of catalog_tsv. Throws ParseError (with the line number in the
/// message) on malformed DSL.
std::vector<Identity> parse_catalog_tsv(std::string_view text);

}  // namespace theta
