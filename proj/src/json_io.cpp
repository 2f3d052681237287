#include "symker/json_io.hpp"

namespace symker {

namespace {

template <class Element>
Json word_terms(const Element& a, bool wedge) {
    Json j;
    j["degree"] = a.degree();
    if (wedge) j["wedge"] = true;
    j["terms"] = Json::array();
    for (const auto& [w, c] : a.terms()) j["terms"].push_back({{"word", w}, {"coeff", coeff_to_json(c)}});
    return j;
}

template <class Element>
Element word_terms_from_json(const Space& space, const Json& j) {
    Element out(space, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) out.add(t.at("word").get<Word>(), coeff_from_json(space.field, t.at("coeff")));
    return out;
}

}  // namespace

Json coeff_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

Scalar coeff_from_json(const FieldSpec& field, const Json& j) {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
    throw std::invalid_argument("coefficient must be a string or an integer");
}

Json to_json(const TensorElement& a) { return word_terms(a, false); }
Json to_json(const ExtElement& a) { return word_terms(a, true); }

Json to_json(const SPrimeElement& a) {
    Json j;
    j["degree"] = a.degree();
    j["terms"] = Json::array();
    for (const auto& [e, c] : a.terms())
        j["terms"].push_back({{"word", e.word}, {"twisted", e.twisted}, {"coeff", coeff_to_json(c)}});
    return j;
}

Json to_json(const MElementRaw& a) {
    Json j;
    j["degree"] = a.degree();
    j["terms"] = Json::array();
    for (const auto& [t, c] : a.terms())
        j["terms"].push_back({{"left", t.left}, {"wedge", {t.a, t.b}}, {"right", t.right}, {"coeff", coeff_to_json(c)}});
    return j;
}

TensorElement tensor_from_json(const Space& space, const Json& j) {
    return word_terms_from_json<TensorElement>(space, j);
}

ExtElement ext_from_json(const Space& space, const Json& j) {
    if (!j.value("wedge", false)) throw std::invalid_argument("exterior element JSON needs \"wedge\": true");
    return word_terms_from_json<ExtElement>(space, j);
}

SPrimeElement sprime_from_json(const Space& space, const Json& j) {
    SPrimeElement out(space, j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        out.add(SPrimeBasisElem{t.at("word").get<Word>(), t.at("twisted").get<bool>()},
                coeff_from_json(space.field, t.at("coeff")));
    return out;
}

Json to_json(const Certificate& cert, bool include_timing) {
    Json j;
    j["sequence"] = cert.sequence;
    j["m"] = cert.m;
    j["n"] = cert.n;
    j["field"] = cert.field.name();
    Json dims = Json::object();
    for (const auto& [k, v] : cert.dims) dims[k] = v;
    j["dims"] = dims;
    j["checks"] = Json::array();
    for (const auto& c : cert.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["pass"] = cert.pass();
    j["cap_exceeded"] = cert.cap_exceeded;
    if (include_timing) j["seconds"] = cert.seconds;
    return j;
}

Json to_json(const std::vector<Certificate>& certs, bool include_timing) {
    Json j = Json::array();
    for (const auto& c : certs) j.push_back(to_json(c, include_timing));
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.sequence = j.at("sequence").get<std::string>();
    cert.m = j.at("m").get<int>();
    cert.n = j.at("n").get<int>();
    cert.field = FieldSpec::parse(j.at("field").get<std::string>());
    for (const auto& [k, v] : j.at("dims").items()) cert.dims.emplace_back(k, v.get<std::uint64_t>());
    for (const auto& c : j.at("checks"))
        cert.add_check(c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>());
    cert.cap_exceeded = j.value("cap_exceeded", false);
    cert.seconds = j.value("seconds", 0.0);
    return cert;
}

}  // namespace symker
