#include "curvecount/output.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace curvecount {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Format format_from_string(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string render(const OutputRecord& rec, Format f) {
    switch (f) {
        case Format::Plain:
            return rec.result;
        case Format::Json: {
            nlohmann::ordered_json j;
            j["command"] = rec.command;
            nlohmann::ordered_json in = nlohmann::ordered_json::object();
            for (const auto& [k, v] : rec.inputs) in[k] = v;
            j["inputs"] = std::move(in);
            j["result"] = rec.result;
            j["provenance"] = rec.provenance;
            j["elapsed_ms"] = rec.elapsed_ms;
            return j.dump();
        }
        case Format::Csv: {
            std::ostringstream in;
            bool first = true;
            for (const auto& [k, v] : rec.inputs) {
                if (!first) in << ';';
                first = false;
                in << k << '=' << v;
            }
            std::ostringstream out;
            out << csv_escape(rec.command) << ',' << csv_escape(in.str()) << ','
                << csv_escape(rec.result) << ',' << csv_escape(rec.provenance) << ','
                << rec.elapsed_ms;
            return out.str();
        }
    }
    throw std::invalid_argument("bad Format");
}

std::string csv_header() { return "command,inputs,result,provenance,elapsed_ms"; }

}  // namespace curvecount
