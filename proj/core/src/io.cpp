// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qtransport/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qtransport/errors.hpp"

namespace qtransport {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw FormatError("cannot format number");
    return std::string(buf, end);
}

std::string matrix_to_csv(const std::vector<std::vector<double>>& matrix) {
    std::string out;
    for (const auto& row : matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += format_double(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<double>> matrix_from_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        std::vector<double> row;
        while (true) {
            const auto comma = line.find(',');
            std::string_view cell = line.substr(0, comma);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw FormatError("line " + std::to_string(line_no) + ": bad number '" +
                                  std::string(cell) + "'");
            }
            row.push_back(v);
            if (comma == std::string_view::npos) break;
            line = line.substr(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(rows.front().size()) + " columns");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const json& require(const json& doc, const char* field) {
    if (!doc.is_object()) throw FormatError("document must be a JSON object");
    auto it = doc.find(field);
    if (it == doc.end()) throw FormatError(std::string("missing field '") + field + "'");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw FormatError("field '" + where + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw FormatError("field '" + where + "' is not finite");
    return d;
}

std::int64_t integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw FormatError("field '" + where + "' must be an integer");
    return v.get<std::int64_t>();
}

std::size_t count(const json& v, const std::string& where) {
    const auto i = integer(v, where);
    if (i < 0) throw FormatError("field '" + where + "' must be nonnegative");
    return static_cast<std::size_t>(i);
}

const json& array(const json& v, const std::string& where) {
    if (!v.is_array()) throw FormatError("field '" + where + "' must be an array");
    return v;
}

Index var_index(const json& v, std::size_t num_vars, const std::string& where) {
    const auto i = count(v, where);
    if (i >= num_vars) {
        throw FormatError("field '" + where + "' index " + std::to_string(i) +
                          " out of range for num_vars " + std::to_string(num_vars));
    }
    return i;
}

std::string at(const char* field, std::size_t k) {
    return std::string(field) + "[" + std::to_string(k) + "]";
}

std::vector<double> number_list(const json& v, const char* field) {
    std::vector<double> out;
    std::size_t k = 0;
    for (const auto& e : array(v, field)) out.push_back(number(e, at(field, k++)));
    return out;
}

Point point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() < 2) throw FormatError("field '" + where + "' must be [x, y]");
    return Point{number(v[0], where + "[0]"), number(v[1], where + "[1]")};
}

// Reads num_vars/offset/linear/quadratic into `poly`-like sinks.
template <class AddTerm>
std::size_t read_quadratic_part(const json& doc, AddTerm&& add) {
    const std::size_t n = count(require(doc, "num_vars"), "num_vars");
    if (doc.contains("offset")) add(Monomial{}, number(doc["offset"], "offset"));
    if (doc.contains("linear")) {
        std::size_t k = 0;
        for (const auto& e : array(doc["linear"], "linear")) {
            const auto where = at("linear", k++);
            if (!e.is_array() || e.size() != 2) throw FormatError("field '" + where + "' must be [i, c]");
            add(Monomial{var_index(e[0], n, where)}, number(e[1], where));
        }
    }
    if (doc.contains("quadratic")) {
        std::size_t k = 0;
        for (const auto& e : array(doc["quadratic"], "quadratic")) {
            const auto where = at("quadratic", k++);
            if (!e.is_array() || e.size() != 3) {
                throw FormatError("field '" + where + "' must be [i, j, c]");
            }
            add(Monomial{var_index(e[0], n, where), var_index(e[1], n, where)}, number(e[2], where));
        }
    }
    return n;
}

}  // namespace

json to_json(const QuboModel& model) {
    json doc;
    doc["num_vars"] = model.num_vars();
    doc["offset"] = model.offset();
    doc["linear"] = json::array();
    for (const auto& [i, h] : model.linear()) doc["linear"].push_back({i, h});
    doc["quadratic"] = json::array();
    for (const auto& [ij, q] : model.quadratic()) doc["quadratic"].push_back({ij.first, ij.second, q});
    return doc;
}

json to_json(const PseudoBooleanPolynomial& poly) {
    json doc;
    doc["num_vars"] = poly.num_vars();
    doc["offset"] = poly.constant_term();
    doc["linear"] = json::array();
    doc["quadratic"] = json::array();
    doc["terms"] = json::array();
    for (const auto& [vars, c] : poly.terms()) {
        switch (vars.size()) {
            case 0: break;
            case 1: doc["linear"].push_back({vars[0], c}); break;
            case 2: doc["quadratic"].push_back({vars[0], vars[1], c}); break;
            default: doc["terms"].push_back({vars, c}); break;
        }
    }
    return doc;
}

json to_json(const CostFunction& cost) {
    if (const auto* q = std::get_if<QuboModel>(&cost)) return to_json(*q);
    if (const auto* p = std::get_if<PseudoBooleanPolynomial>(&cost)) return to_json(*p);
    return to_json(to_qubo(std::get<IsingModel>(cost)));
}

QuboModel qubo_from_json(const json& doc) {
    const std::size_t n = count(require(doc, "num_vars"), "num_vars");
    QuboModel m(n);
    read_quadratic_part(doc, [&](const Monomial& vars, double c) {
        switch (vars.size()) {
            case 0: m.add_offset(c); break;
            case 1: m.add_linear(vars[0], c); break;
            default: m.add_quadratic(vars[0], vars[1], c); break;
        }
    });
    return m;
}

PseudoBooleanPolynomial hobo_from_json(const json& doc) {
    const std::size_t n = count(require(doc, "num_vars"), "num_vars");
    PseudoBooleanPolynomial p(n);
    read_quadratic_part(doc, [&](const Monomial& vars, double c) { p.add_term(vars, c); });
    if (doc.contains("terms")) {
        std::size_t k = 0;
        for (const auto& e : array(doc["terms"], "terms")) {
            const auto where = at("terms", k++);
            if (!e.is_array() || e.size() != 2 || !e[0].is_array()) {
                throw FormatError("field '" + where + "' must be [[i, j, ...], c]");
            }
            Monomial vars;
            for (const auto& i : e[0]) vars.push_back(var_index(i, n, where));
            p.add_term(std::move(vars), number(e[1], where));
        }
    }
    return p;
}

CostFunction cost_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("terms")) return hobo_from_json(doc);
    return qubo_from_json(doc);
}

TspInstance tsp_from_json(const json& doc) {
    const json& rows = array(require(doc, "distance"), "distance");
    std::vector<std::vector<double>> d;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = at("distance", i);
        if (!rows[i].is_array()) throw FormatError("field '" + where + "' must be an array");
        std::vector<double> row;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            row.push_back(number(rows[i][j], where + "[" + std::to_string(j) + "]"));
        }
        d.push_back(std::move(row));
    }
    try {
        return TspInstance(std::move(d));
    } catch (const Error& e) {
        throw FormatError(std::string("field 'distance': ") + e.what());
    }
}

json to_json(const TspInstance& inst) { return json{{"distance", inst.matrix()}}; }

TrafficGrid traffic_from_json(const json& doc) {
    TrafficGrid g;
    g.rows = count(require(doc, "rows"), "rows");
    g.cols = count(require(doc, "cols"), "cols");
    g.q_ns = number_list(require(doc, "q_ns"), "q_ns");
    g.q_ew = number_list(require(doc, "q_ew"), "q_ew");
    if (doc.contains("prev")) {
        std::size_t k = 0;
        for (const auto& e : array(doc["prev"], "prev")) {
            g.prev.push_back(static_cast<int>(integer(e, at("prev", k++))));
        }
    } else {
        g.prev.assign(g.rows * g.cols, 0);
    }
    g.bias_weight = doc.contains("A") ? number(doc["A"], "A") : 1.0;
    g.switch_weight = doc.contains("B") ? number(doc["B"], "B") : 0.0;
    g.green_wave_weight = doc.contains("G") ? number(doc["G"], "G") : 0.0;
    try {
        g.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("traffic document: ") + e.what());
    }
    return g;
}

json to_json(const TrafficGrid& g) {
    return json{{"rows", g.rows}, {"cols", g.cols},          {"q_ns", g.q_ns},
                {"q_ew", g.q_ew}, {"prev", g.prev},          {"A", g.bias_weight},
                {"B", g.switch_weight}, {"G", g.green_wave_weight}};
}

CvrpInstance cvrp_from_json(const json& doc) {
    CvrpInstance inst;
    inst.depot = point(require(doc, "depot"), "depot");
    std::size_t k = 0;
    for (const auto& e : array(require(doc, "customers"), "customers")) {
        const auto where = at("customers", k++);
        if (!e.is_array() || e.size() != 3) {
            throw FormatError("field '" + where + "' must be [x, y, demand]");
        }
        inst.customers.push_back(Customer{point(e, where), integer(e[2], where + "[2]")});
    }
    inst.capacity = integer(require(doc, "capacity"), "capacity");
    inst.vehicles = count(require(doc, "vehicles"), "vehicles");
    try {
        inst.validate();
    } catch (const Error& e) {
        throw FormatError(std::string("cvrp document: ") + e.what());
    }
    return inst;
}

json to_json(const CvrpInstance& inst) {
    json customers = json::array();
    for (const auto& c : inst.customers) {
        customers.push_back({c.location.x, c.location.y, c.demand});
    }
    return json{{"depot", {inst.depot.x, inst.depot.y}},
                {"customers", customers},
                {"capacity", inst.capacity},
                {"vehicles", inst.vehicles}};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << contents;
}

}  // namespace qtransport
