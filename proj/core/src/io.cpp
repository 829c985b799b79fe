#include "cfm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cfm/format.hpp"

namespace cfm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

double require_number(const ordered_json& j, const std::string& where) {
    if (!j.is_number())
        throw Error(Errc::syntax_error, where + ": expected a number");
    return j.get<double>();
}

int require_int(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error(Errc::syntax_error, where + ": expected an integer");
    return j.get<int>();
}

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

double parse_double_field(std::string_view token, std::size_t row, std::size_t col) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(Errc::syntax_error, "row " + std::to_string(row) + ", column " +
                                            std::to_string(col) + ": cannot parse '" +
                                            std::string(token) + "' as a number");
    if (!std::isfinite(v))
        throw Error(Errc::non_finite_value, "row " + std::to_string(row) + ", column " +
                                                std::to_string(col) + ": non-finite value '" +
                                                std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace

Scenario parse_scenario(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::syntax_error, "scenario line " +
                                            std::to_string(line_of(text, e.byte)) + ": " +
                                            e.what());
    }

    if (!doc.is_object())
        throw Error(Errc::syntax_error, "scenario document must be a JSON object");
    if (!doc.contains("sources") || !doc["sources"].is_array())
        throw Error(Errc::syntax_error, "scenario needs a 'sources' array");

    Scenario s;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw Error(Errc::syntax_error, "'name' must be a string");
        s.name = doc["name"].get<std::string>();
    }

    std::vector<Source> raw;
    std::size_t k = 0;
    for (const ordered_json& item : doc["sources"]) {
        const std::string where = "sources[" + std::to_string(k++) + "]";
        if (!item.is_object())
            throw Error(Errc::syntax_error, where + ": expected an object");
        if (!item.contains("id") || !item.contains("lo") || !item.contains("hi"))
            throw Error(Errc::syntax_error, where + ": needs fields id, lo, hi");
        raw.push_back(Source{require_int(item["id"], where + ".id"),
                             {require_number(item["lo"], where + ".lo"),
                              require_number(item["hi"], where + ".hi")}});
    }

    try {
        s.evidence = validate_evidence(raw);
    } catch (const Error& e) {
        throw Error(Errc::validation_error, e.code(),
                    std::string("scenario rejected: ") + e.what());
    }
    return s;
}

std::string emit_scenario(const Scenario& scenario) {
    ordered_json doc;
    doc["name"] = scenario.name;
    doc["sources"] = ordered_json::array();
    for (const Source& s : scenario.evidence.sources()) {
        ordered_json item;
        item["id"] = s.id;
        item["lo"] = s.interval.lo;
        item["hi"] = s.interval.hi;
        doc["sources"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

SensorSeries parse_series(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(trim_cr(text.substr(start)));
            break;
        }
        lines.push_back(trim_cr(text.substr(start, nl - start)));
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty())
        throw Error(Errc::syntax_error, "series file is empty");

    const std::vector<std::string_view> header = split_fields(lines.front());
    if (header.empty() || header.front() != "time")
        throw Error(Errc::syntax_error, "series header must start with 'time'");
    if (header.size() < 2)
        throw Error(Errc::syntax_error, "series header names no sensor columns");

    SensorSeries series;
    for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string_view name = header[c];
        int id = 0;
        const bool ok = name.size() >= 2 && name.front() == 's' &&
                        std::from_chars(name.data() + 1, name.data() + name.size(), id).ptr ==
                            name.data() + name.size() &&
                        id >= 1;
        if (!ok)
            throw Error(Errc::syntax_error, "header column " + std::to_string(c + 1) + ": '" +
                                                std::string(name) + "' is not of the form s<id>");
        series.source_ids.push_back(id);
    }
    series.readings.assign(series.source_ids.size(), {});

    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::size_t row = r + 1; // 1-based, counting the header
        const std::vector<std::string_view> fields = split_fields(lines[r]);
        if (fields.size() != header.size())
            throw Error(Errc::ragged_row, "row " + std::to_string(row) + " has " +
                                              std::to_string(fields.size()) + " fields, expected " +
                                              std::to_string(header.size()));
        const double t = parse_double_field(fields[0], row, 1);
        if (!series.timestamps.empty() && t <= series.timestamps.back())
            throw Error(Errc::non_increasing_time,
                        "row " + std::to_string(row) + ": time " + format_shortest(t) +
                            " does not increase past " + format_shortest(series.timestamps.back()));
        series.timestamps.push_back(t);
        for (std::size_t c = 1; c < fields.size(); ++c)
            series.readings[c - 1].push_back(parse_double_field(fields[c], row, c + 1));
    }

    validate_series(series);
    return series;
}

std::string emit_series(const SensorSeries& series) {
    validate_series(series);
    std::string out = "time";
    for (int id : series.source_ids) out += ",s" + std::to_string(id);
    out += "\n";
    for (std::size_t t = 0; t < series.sample_count(); ++t) {
        out += format_shortest(series.timestamps[t]);
        for (const std::vector<double>& trace : series.readings)
            out += "," + format_shortest(trace[t]);
        out += "\n";
    }
    return out;
}

std::string subset_label(const SourceSubset& sub) {
    std::string label;
    for (int id : sub.members()) {
        if (!label.empty()) label += "+";
        label += "x" + std::to_string(id);
    }
    return label;
}

std::string emit_lattice(const ConflictLattice& lat, LatticeFormat format) {
    struct Row {
        std::vector<int> members;
        double cf;
    };
    std::vector<Row> rows;
    rows.reserve(lat.subset_count());
    for (std::uint64_t mask = 1; mask <= lat.full_mask(); ++mask)
        rows.push_back({SourceSubset::from_mask(mask).members(), lat.value_at(mask)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });

    auto label_of = [](const Row& row) {
        std::string label;
        for (int id : row.members) {
            if (!label.empty()) label += "+";
            label += "x" + std::to_string(id);
        }
        return label;
    };

    if (format == LatticeFormat::table) {
        std::string out = "subset,size,cf\n";
        for (const Row& row : rows)
            out += label_of(row) + "," + std::to_string(row.members.size()) + "," +
                   format_fixed6(row.cf) + "\n";
        return out;
    }

    ordered_json doc;
    doc["n"] = lat.source_count();
    doc["subsets"] = ordered_json::array();
    for (const Row& row : rows) {
        ordered_json item;
        item["subset"] = label_of(row);
        item["members"] = row.members;
        item["size"] = row.members.size();
        // six decimal places, same as the table rendering
        item["cf"] = std::round(row.cf * 1e6) / 1e6;
        doc["subsets"].push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

} // namespace cfm
