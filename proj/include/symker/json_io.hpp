#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symker/certificate.hpp"
#include "symker/exterior.hpp"
#include "symker/m_bimodule.hpp"
#include "symker/sprime.hpp"
#include "symker/tensor.hpp"

namespace symker {

using Json = nlohmann::ordered_json;

/// Rationals as strings ("p/q", or "p" for integers); F_p residues as integers.
Json coeff_to_json(const Scalar& s);
Scalar coeff_from_json(const FieldSpec& field, const Json& j);

/// {degree, terms: [{word, coeff}]}
Json to_json(const TensorElement& a);
/// {degree, wedge: true, terms: [{word, coeff}]}
Json to_json(const ExtElement& a);
/// {degree, terms: [{word, twisted, coeff}]}
Json to_json(const SPrimeElement& a);
/// {degree, terms: [{left, wedge: [a, b], right, coeff}]}
Json to_json(const MElementRaw& a);

TensorElement tensor_from_json(const Space& space, const Json& j);
ExtElement ext_from_json(const Space& space, const Json& j);
SPrimeElement sprime_from_json(const Space& space, const Json& j);

/// {sequence, m, n, field, dims, checks, pass, cap_exceeded[, seconds]}
Json to_json(const Certificate& cert, bool include_timing = true);
Json to_json(const std::vector<Certificate>& certs, bool include_timing = true);
Certificate certificate_from_json(const Json& j);

}  // namespace symker
