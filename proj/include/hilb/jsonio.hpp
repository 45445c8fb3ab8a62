#pragma once

#include <hilb/hilbert.hpp>
#include <hilb/partition.hpp>
#include <hilb/symfunc.hpp>

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

inline nlohmann::json partition_to_json(const Partition& lambda) {
    return nlohmann::json(lambda.parts());
}

/// JSON form of a symmetric function: array of {"mu": [...], "coeff": "num/den"},
/// in the same deterministic term order as the text rendering.
inline nlohmann::json symfunc_to_json(const SymFunc& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mu, c] : f.terms())
        out.push_back({{"mu", partition_to_json(mu)}, {"coeff", to_string(c)}});
    return out;
}

/// Parse a custom weight table: a JSON object mapping partition strings
/// ("3,1") to integer arrays. Every partition of n must appear exactly once
/// and all arrays must share one positive length (the rank).
inline WeightAssignment load_weight_assignment(std::istream& in, int n) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("weight table: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("weight table: expected a JSON object");
    std::map<Partition, std::vector<std::int64_t>> table;
    for (const auto& [key, value] : doc.items()) {
        Partition lambda;
        try {
            lambda = parse_partition(key);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("weight table: bad partition key \"" + key + "\"");
        }
        if (lambda.weight() != n)
            throw std::invalid_argument("weight table: key \"" + key +
                                        "\" is not a partition of " + std::to_string(n));
        if (!value.is_array())
            throw std::invalid_argument("weight table: value for \"" + key +
                                        "\" must be an integer array");
        std::vector<std::int64_t> weights;
        for (const auto& item : value) {
            if (!item.is_number_integer())
                throw std::invalid_argument("weight table: non-integer weight for \"" + key + "\"");
            weights.push_back(item.get<std::int64_t>());
        }
        if (!table.emplace(lambda, std::move(weights)).second)
            throw std::invalid_argument("weight table: duplicate partition \"" + key + "\"");
    }
    return WeightAssignment(n, std::move(table));  // validates coverage and rank
}

}  // namespace hilb
