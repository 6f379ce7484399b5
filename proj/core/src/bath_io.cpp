// bath_io.cpp: bath file parser

#include "qbm/bath_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

struct Field {
    std::string_view text;
    std::size_t column;
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> out;
    for (std::size_t i = 0; i < line.size();) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

double number(const Field& f, std::size_t line) {
    double v = 0.0;
    const auto* end = f.text.data() + f.text.size();
    const auto [ptr, ec] = std::from_chars(f.text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        throw ParseError("invalid number '" + std::string(f.text) + "'", line, f.column);
    return v;
}

double keyed_value(const std::vector<Field>& fields, std::string_view key, std::size_t line) {
    if (fields[0].text != key)
        throw ParseError("expected '" + std::string(key) + " <value>', got '" + std::string(fields[0].text) + "'",
                         line, fields[0].column);
    if (fields.size() != 2)
        throw ParseError("expected exactly one value after '" + std::string(key) + "'", line, fields[0].column);
    const double v = number(fields[1], line);
    if (!(v > 0.0)) throw ParseError(std::string(key) + " must be positive", line, fields[1].column);
    return v;
}

}  // namespace

DiscreteBath parse_bath(std::string_view text) {
    DiscreteBath bath;
    bath.oscillators.clear();
    int stage = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line = line.substr(0, line.find('#'));
        const auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (stage == 0) {
            bath.M = keyed_value(fields, "M", line_no);
            stage = 1;
        } else if (stage == 1) {
            bath.omega0 = keyed_value(fields, "omega0", line_no);
            stage = 2;
        } else {
            if (fields.size() != 3)
                throw ParseError("expected '<m_j> <omega_j> <c_j>', got " + std::to_string(fields.size()) + " fields",
                                 line_no, fields[0].column);
            BathOscillator o{number(fields[0], line_no), number(fields[1], line_no), number(fields[2], line_no)};
            if (!(o.mass > 0.0)) throw ParseError("mass must be positive", line_no, fields[0].column);
            if (!(o.omega > 0.0)) throw ParseError("frequency must be positive", line_no, fields[1].column);
            if (o.coupling == 0.0) throw ParseError("coupling must be nonzero", line_no, fields[2].column);
            if (!bath.oscillators.empty()) {
                const double prev = bath.oscillators.back().omega;
                if (!(o.omega > prev) || o.omega * o.omega - prev * prev < 1e-13 * o.omega * o.omega)
                    throw ParseError("bath frequencies must be strictly increasing", line_no, fields[1].column);
            }
            bath.oscillators.push_back(o);
        }
    }
    if (stage < 2)
        throw ParseError(stage == 0 ? "missing 'M <value>' line" : "missing 'omega0 <value>' line", line_no, 0);
    return bath;
}

DiscreteBath load_bath(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open bath file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bath(buf.str());
}

std::string format_bath(const DiscreteBath& bath) {
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "M %.17g\nomega0 %.17g\n", bath.M, bath.omega0);
    out += buf;
    for (const auto& o : bath.oscillators) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", o.mass, o.omega, o.coupling);
        out += buf;
    }
    return out;
}

}  // namespace qbm
