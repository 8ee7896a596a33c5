#include "groverian/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "groverian/errors.hpp"

namespace groverian {

using nlohmann::json;

StateVector parse_state_json(const std::string& text, const std::string& origin)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw io_error(origin + ": not valid JSON: " + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes"))
            throw io_error(origin + ": expected an object with \"n\" and \"amplitudes\"");
        int n = doc.at("n").get<int>();
        const json& arr = doc.at("amplitudes");
        if (!arr.is_array())
            throw io_error(origin + ": \"amplitudes\" must be an array");
        std::vector<complex> amps;
        amps.reserve(arr.size());
        for (const json& ent : arr) {
            if (ent.is_number()) {
                amps.emplace_back(ent.get<double>(), 0.0);
            } else if (ent.is_array() && ent.size() == 2 &&
                       ent[0].is_number() && ent[1].is_number()) {
                amps.emplace_back(ent[0].get<double>(), ent[1].get<double>());
            } else {
                throw io_error(origin + ": amplitude entries must be numbers or [re, im] pairs");
            }
        }
        return StateVector(n, std::move(amps));
    } catch (const io_error&) {
        throw;
    } catch (const std::exception& e) {
        // wrong length, bad norm, bad n: still a malformed input file
        throw io_error(origin + ": " + e.what());
    }
}

StateVector load_state_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_state_json(ss.str(), path);
}

std::string state_to_json(const StateVector& s)
{
    json arr = json::array();
    bool real = s.is_real(0.0);
    for (const auto& a : s.amplitudes()) {
        if (real)
            arr.push_back(a.real());
        else
            arr.push_back(json::array({a.real(), a.imag()}));
    }
    json doc{{"n", s.qubits()}, {"amplitudes", arr}};
    return doc.dump();
}

void save_state_json(const StateVector& s, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error(path + ": cannot open file for writing");
    out << state_to_json(s) << '\n';
}

} // namespace groverian
