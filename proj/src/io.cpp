#include "fpl/io.hpp"

#include <json.hpp>

namespace fpl {

std::string ideal_json(const Ideal& ideal) {
    nlohmann::json j;
    j["p"] = ideal.ring->p;
    if (ideal.ring->nvars % 2 != 0)
        throw input_error("ideal_json: expected a binomial-edge ring (2n variables)");
    j["n"] = ideal.ring->nvars / 2;
    nlohmann::json gens = nlohmann::json::array();
    for (const Poly& f : ideal.gens) gens.push_back(f.str());
    j["gens"] = gens;
    return j.dump();
}

Ideal ideal_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("ideal_from_json: ") + e.what());
    }
    RingPtr r = Ring::bei(j.at("p").get<uint32_t>(), j.at("n").get<int>());
    std::vector<Poly> gens;
    for (const auto& s : j.at("gens")) gens.push_back(parse_poly(r, s.get<std::string>()));
    return Ideal(r, std::move(gens));
}

}  // namespace fpl
