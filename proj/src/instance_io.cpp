#include "sml/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sml {

namespace {

using nlohmann::json;

double require_number(const json& node, const std::string& where) {
    if (!node.is_number()) {
        throw ParseError(where + " must be a number");
    }
    return node.get<double>();
}

int require_integer(const json& node, const std::string& where) {
    if (!node.is_number_integer()) {
        throw ParseError(where + " must be an integer");
    }
    return node.get<int>();
}

} // namespace

Instance parse_instance(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw ParseError("instance document is not valid JSON");
    }
    if (!doc.is_object()) {
        throw ParseError("instance document must be a JSON object");
    }
    if (!doc.contains("format_version")) {
        throw ParseError("missing 'format_version'");
    }
    if (require_integer(doc["format_version"], "'format_version'") != 1) {
        throw ParseError("unsupported format_version (expected 1)");
    }
    if (!doc.contains("u0")) {
        throw ParseError("missing 'u0'");
    }
    double u0 = require_number(doc["u0"], "'u0'");
    if (u0 < 0.0) {
        throw ParseError("'u0' must be >= 0");
    }
    if (!doc.contains("products") || !doc["products"].is_array()) {
        throw ParseError("'products' must be an array");
    }

    std::vector<Product> products;
    products.reserve(doc["products"].size());
    std::size_t position = 0;
    for (const json& node : doc["products"]) {
        std::string where = "products[" + std::to_string(position++) + "]";
        if (!node.is_object()) {
            throw ParseError(where + " must be an object");
        }
        for (const char* key : {"id", "level", "revenue", "utility"}) {
            if (!node.contains(key)) {
                throw ParseError(where + " is missing '" + key + "'");
            }
        }
        if (!node["id"].is_string()) {
            throw ParseError(where + ".id must be a string");
        }
        Product p;
        p.id = node["id"].get<std::string>();
        p.level = require_integer(node["level"], where + ".level");
        p.revenue = require_number(node["revenue"], where + ".revenue");
        p.utility = require_number(node["utility"], where + ".utility");
        if (p.id.empty()) {
            throw ParseError(where + ".id must be nonempty");
        }
        if (p.level < 1) {
            throw ParseError(where + ".level must be >= 1");
        }
        if (p.revenue < 0.0) {
            throw ParseError(where + ".revenue must be >= 0");
        }
        if (p.utility <= 0.0) {
            throw ParseError(where + ".utility must be > 0");
        }
        products.push_back(std::move(p));
    }

    try {
        return Instance(std::move(products), u0);
    } catch (const Error& e) {
        throw ParseError(e.what()); // duplicate ids and the like
    }
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["format_version"] = 1;
    doc["u0"] = instance.outside_utility();
    doc["products"] = json::array();
    for (const Product& p : instance.products()) {
        doc["products"].push_back(
            {{"id", p.id}, {"level", p.level}, {"revenue", p.revenue}, {"utility", p.utility}});
    }
    return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << serialize_instance(instance);
}

} // namespace sml
