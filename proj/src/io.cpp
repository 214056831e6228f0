#include "fracperim/io.hpp"

#include <fstream>
#include <stdexcept>

namespace fracperim {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace

DiscreteSpace space_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("space JSON must be an object");
    for (const char* key : {"points", "weights", "resolution_h"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("space JSON missing field '") + key + "'");

    DiscreteSpace space;
    const json& pts = j.at("points");
    if (!pts.is_array() || pts.empty())
        throw std::runtime_error("space JSON: 'points' must be a nonempty array");
    std::size_t n = pts.size();
    std::size_t d = pts.front().is_array() ? pts.front().size() : 1;
    if (d != 1 && d != 2)
        throw std::runtime_error("space JSON: points must have 1 or 2 coordinates");
    space.dim = static_cast<int>(d);
    space.xs.reserve(n);
    if (d == 2) space.ys.reserve(n);
    for (const json& p : pts) {
        if (p.is_number()) {
            if (d != 1) throw std::runtime_error("space JSON: ragged point array");
            space.xs.push_back(p.get<double>());
            continue;
        }
        if (!p.is_array() || p.size() != d)
            throw std::runtime_error("space JSON: ragged point array");
        space.xs.push_back(p.at(0).get<double>());
        if (d == 2) space.ys.push_back(p.at(1).get<double>());
    }
    space.weights = j.at("weights").get<std::vector<double>>();
    if (space.weights.size() != n)
        throw std::runtime_error("space JSON: weights size does not match points");
    space.resolution_h = j.at("resolution_h").get<double>();

    std::string metric = j.value("metric", std::string("euclidean"));
    if (metric == "table") {
        if (!j.contains("distances"))
            throw std::runtime_error("space JSON: metric 'table' requires 'distances'");
        auto tri = j.at("distances").get<std::vector<double>>();
        if (tri.size() != n * (n - 1) / 2)
            throw std::runtime_error("space JSON: distances must hold the upper triangle");
        space.table.assign(n * n, 0.0);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jdx = i + 1; jdx < n; ++jdx, ++k) {
                space.table[i * n + jdx] = tri[k];
                space.table[jdx * n + i] = tri[k];
            }
    } else if (metric != "euclidean") {
        throw std::runtime_error("space JSON: metric must be 'euclidean' or 'table'");
    }
    space.validate();
    return space;
}

json space_to_json(const DiscreteSpace& space) {
    json j;
    json pts = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (space.dim == 1)
            pts.push_back(json::array({space.xs[i]}));
        else
            pts.push_back(json::array({space.xs[i], space.ys[i]}));
    }
    j["points"] = std::move(pts);
    j["weights"] = space.weights;
    j["resolution_h"] = space.resolution_h;
    if (space.has_table()) {
        j["metric"] = "table";
        std::vector<double> tri;
        std::size_t n = space.size();
        tri.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jdx = i + 1; jdx < n; ++jdx) tri.push_back(space.table[i * n + jdx]);
        j["distances"] = std::move(tri);
    } else {
        j["metric"] = "euclidean";
    }
    return j;
}

DiscreteSpace load_space_json(const std::string& path) {
    return space_from_json(read_json_file(path));
}

void save_space_json(const DiscreteSpace& space, const std::string& path) {
    write_json_file(space_to_json(space), path);
}

IndicatorSet load_set_json(const std::string& path, std::size_t expected_size) {
    json j = read_json_file(path);
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("indicator"))
            throw std::runtime_error("set JSON object must contain 'indicator'");
        arr = &j.at("indicator");
    }
    if (!arr->is_array()) throw std::runtime_error("set JSON must be a 0/1 array");
    IndicatorSet set;
    set.in.reserve(arr->size());
    for (const json& v : *arr) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
            throw std::runtime_error("set JSON entries must be 0 or 1");
        set.in.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    if (expected_size != 0 && set.size() != expected_size)
        throw std::runtime_error("set JSON size does not match the space");
    return set;
}

void save_set_json(const IndicatorSet& set, const std::string& path) {
    json arr = json::array();
    for (auto b : set.in) arr.push_back(static_cast<int>(b));
    json j;
    j["indicator"] = std::move(arr);
    write_json_file(j, path);
}

}  // namespace fracperim
