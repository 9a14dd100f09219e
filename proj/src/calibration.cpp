/*
   Copyright 2026 The polhist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "polhist/calibration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace polhist {

namespace {

constexpr const char* kMagicLine = "# polhist document v1";
constexpr int kCharacterizedGrayMax = 40;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view token, int line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                         std::string(token) + "'");
    return v;
}

int parse_int(std::string_view token, int line_no) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                         std::string(token) + "'");
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

StokesVector parse_stokes(std::string_view value, int line_no) {
    const auto tokens = split_ws(value);
    if (tokens.size() != 4)
        throw ParseError("line " + std::to_string(line_no) +
                         ": 'initial' needs four Stokes components");
    return StokesVector(parse_double(tokens[0], line_no), parse_double(tokens[1], line_no),
                        parse_double(tokens[2], line_no), parse_double(tokens[3], line_no));
}

/// Splits "key = value"; returns false for non key/value lines.
bool split_key_value(std::string_view line, std::string_view& key, std::string_view& value) {
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) return false;
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    return !key.empty();
}

struct DocumentLines {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
};

DocumentLines read_document(const std::string& text) {
    DocumentLines doc;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool magic_seen = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view t = trim(raw);
        if (t.empty()) continue;
        if (!magic_seen) {
            if (t != kMagicLine)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": missing document header '" + kMagicLine + "'");
            magic_seen = true;
            continue;
        }
        if (t.front() == '#') continue;
        doc.lines.emplace_back(line_no, std::string(t));
    }
    if (!magic_seen) throw ParseError("empty document: missing header line");
    return doc;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, ptr);
}

const MuellerMatrix* CalibrationTable::find(int gray_level) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), gray_level,
        [](const Entry& e, int g) { return e.gray_level < g; });
    if (it == entries.end() || it->gray_level != gray_level) return nullptr;
    return &it->matrix;
}

const MuellerMatrix& CalibrationTable::at(int gray_level) const {
    const MuellerMatrix* m = find(gray_level);
    if (m == nullptr)
        throw MissingGrayLevel("missing gray level " + std::to_string(gray_level));
    return *m;
}

void validate(const MeasuredTrajectory& m) {
    for (std::size_t i = 0; i < m.steps.size(); ++i) {
        const auto& s = m.steps[i];
        const double norm = std::sqrt(s.sx * s.sx + s.sy * s.sy + s.sz * s.sz);
        if (norm > 1.0 + 1e-6)
            throw ValidationError("trajectory '" + m.label + "' step " +
                                  std::to_string(i) + ": Pauli-mean norm " +
                                  std::to_string(norm) + " exceeds 1");
    }
}

CalibrationTable parse_calibration(const std::string& text, Physicality mode) {
    const DocumentLines doc = read_document(text);
    CalibrationTable table;
    std::string section;
    std::optional<int> pending_gray;
    std::vector<double> matrix_rows;

    auto flush_entry = [&](int line_no) {
        if (!pending_gray) return;
        if (matrix_rows.size() != 16)
            throw ParseError("line " + std::to_string(line_no) + ": gray level " +
                             std::to_string(*pending_gray) + " has " +
                             std::to_string(matrix_rows.size() / 4) +
                             " matrix rows, expected 4");
        Mat4 m;
        std::copy(matrix_rows.begin(), matrix_rows.end(), m.a.begin());
        MuellerMatrix mueller(m);
        double violation = 0.0;
        if (!passes_physicality_screen(mueller, &violation)) {
            const std::string msg = "gray level " + std::to_string(*pending_gray) +
                                    " fails the physicality screen (violation " +
                                    format_number(violation) + ")";
            if (mode == Physicality::Strict) throw UnphysicalMatrix(msg);
            table.warnings.push_back(msg);
        }
        table.entries.push_back({*pending_gray, std::move(mueller)});
        pending_gray.reset();
        matrix_rows.clear();
    };

    bool saw_calibration = false;
    for (const auto& [line_no, line] : doc.lines) {
        if (line.front() == '[') {
            flush_entry(line_no);
            section = line;
            if (section == "[calibration]") saw_calibration = true;
            else if (section != "[metadata]")
                throw ParseError("line " + std::to_string(line_no) + ": unexpected section " +
                                 section + " in a calibration document");
            continue;
        }
        if (section == "[metadata]") {
            std::string_view key, value;
            if (!split_key_value(line, key, value))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'key = value' in [metadata]");
            if (key == "source") table.source = std::string(value);
            else if (key == "wavelength") table.wavelength = std::string(value);
            else
                throw ParseError("line " + std::to_string(line_no) +
                                 ": unknown metadata key '" + std::string(key) + "'");
            continue;
        }
        if (section == "[calibration]") {
            std::string_view key, value;
            if (split_key_value(line, key, value) && key == "gray") {
                flush_entry(line_no);
                pending_gray = parse_int(value, line_no);
                continue;
            }
            if (!pending_gray)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": matrix row before any 'gray =' entry");
            const auto tokens = split_ws(line);
            if (tokens.size() != 4)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": matrix rows need exactly 4 numbers");
            for (const auto& t : tokens) matrix_rows.push_back(parse_double(t, line_no));
            continue;
        }
        throw ParseError("line " + std::to_string(line_no) + ": content outside a section");
    }
    flush_entry(0);

    if (!saw_calibration) throw ParseError("document has no [calibration] section");

    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const auto& a, const auto& b) { return a.gray_level < b.gray_level; });
    for (std::size_t i = 1; i < table.entries.size(); ++i)
        if (table.entries[i].gray_level == table.entries[i - 1].gray_level)
            throw DuplicateGrayLevel("gray level " +
                                     std::to_string(table.entries[i].gray_level) +
                                     " appears twice");

    int above_range = 0;
    for (const auto& e : table.entries)
        if (e.gray_level > kCharacterizedGrayMax) ++above_range;
    if (above_range > 0)
        table.warnings.push_back(
            std::to_string(above_range) + " gray level(s) above " +
            std::to_string(kCharacterizedGrayMax) +
            ": flicker-induced depolarization may dominate the modulation there");
    return table;
}

CalibrationTable load_calibration(const std::filesystem::path& path, Physicality mode) {
    return parse_calibration(read_file(path), mode);
}

std::string write_calibration(const CalibrationTable& table) {
    std::vector<CalibrationTable::Entry> sorted = table.entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.gray_level < b.gray_level; });
    std::ostringstream os;
    os << kMagicLine << "\n";
    if (!table.source.empty() || !table.wavelength.empty()) {
        os << "\n[metadata]\n";
        if (!table.source.empty()) os << "source = " << table.source << "\n";
        if (!table.wavelength.empty()) os << "wavelength = " << table.wavelength << "\n";
    }
    os << "\n[calibration]\n";
    for (const auto& e : sorted) {
        os << "gray = " << e.gray_level << "\n";
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                if (c > 0) os << " ";
                os << format_number(e.matrix(r, c));
            }
            os << "\n";
        }
    }
    return os.str();
}

void save_calibration(const std::filesystem::path& path, const CalibrationTable& table) {
    write_file(path, write_calibration(table));
}

std::vector<TrajectorySpec> parse_trajectories(const std::string& text) {
    const DocumentLines doc = read_document(text);
    std::vector<TrajectorySpec> specs;
    std::string section;
    std::string label;
    std::optional<StokesVector> initial;
    std::vector<int> levels;

    auto flush = [&]() {
        if (section != "[trajectory]") return;
        if (!initial) throw ParseError("[trajectory] section missing 'initial'");
        if (levels.empty()) throw ParseError("[trajectory] section missing 'levels'");
        specs.push_back({label, *initial, levels});
        label.clear();
        initial.reset();
        levels.clear();
    };

    for (const auto& [line_no, line] : doc.lines) {
        if (line.front() == '[') {
            flush();
            section = line;
            if (section != "[trajectory]" && section != "[metadata]")
                throw ParseError("line " + std::to_string(line_no) + ": unexpected section " +
                                 section + " in a trajectory document");
            continue;
        }
        if (section == "[metadata]") continue;  // tolerated, ignored
        if (section != "[trajectory]")
            throw ParseError("line " + std::to_string(line_no) + ": content outside a section");
        std::string_view key, value;
        if (!split_key_value(line, key, value))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        if (key == "label") {
            label = std::string(value);
        } else if (key == "initial") {
            initial = parse_stokes(value, line_no);
        } else if (key == "levels") {
            for (const auto& t : split_ws(value)) levels.push_back(parse_int(t, line_no));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                             std::string(key) + "'");
        }
    }
    flush();
    if (specs.empty()) throw ParseError("document has no [trajectory] section");
    return specs;
}

std::vector<TrajectorySpec> load_trajectories(const std::filesystem::path& path) {
    return parse_trajectories(read_file(path));
}

std::string write_trajectories(const std::vector<TrajectorySpec>& specs) {
    std::ostringstream os;
    os << kMagicLine << "\n";
    for (const auto& s : specs) {
        os << "\n[trajectory]\n";
        if (!s.label.empty()) os << "label = " << s.label << "\n";
        os << "initial = " << format_number(s.initial.s0()) << " "
           << format_number(s.initial.s1()) << " " << format_number(s.initial.s2()) << " "
           << format_number(s.initial.s3()) << "\n";
        os << "levels =";
        for (int g : s.gray_levels) os << " " << g;
        os << "\n";
    }
    return os.str();
}

void save_trajectories(const std::filesystem::path& path,
                       const std::vector<TrajectorySpec>& specs) {
    write_file(path, write_trajectories(specs));
}

std::vector<MeasuredTrajectory> parse_measured(const std::string& text) {
    const DocumentLines doc = read_document(text);
    std::vector<MeasuredTrajectory> out;
    std::string section;
    std::string label;
    std::optional<StokesVector> initial;
    std::vector<MeasuredTrajectory::Step> steps;

    auto flush = [&]() {
        if (section != "[measured]") return;
        if (!initial) throw ParseError("[measured] section missing 'initial'");
        if (steps.empty()) throw ParseError("[measured] section has no steps");
        MeasuredTrajectory m{label, *initial, steps};
        validate(m);
        out.push_back(std::move(m));
        label.clear();
        initial.reset();
        steps.clear();
    };

    for (const auto& [line_no, line] : doc.lines) {
        if (line.front() == '[') {
            flush();
            section = line;
            if (section != "[measured]" && section != "[metadata]")
                throw ParseError("line " + std::to_string(line_no) + ": unexpected section " +
                                 section + " in a measured document");
            continue;
        }
        if (section == "[metadata]") continue;
        if (section != "[measured]")
            throw ParseError("line " + std::to_string(line_no) + ": content outside a section");
        std::string_view key, value;
        if (!split_key_value(line, key, value))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
        if (key == "label") {
            label = std::string(value);
        } else if (key == "initial") {
            initial = parse_stokes(value, line_no);
        } else if (key == "step") {
            const auto tokens = split_ws(value);
            if (tokens.size() != 4)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": 'step' needs gray level and three Pauli means");
            steps.push_back({parse_int(tokens[0], line_no), parse_double(tokens[1], line_no),
                             parse_double(tokens[2], line_no),
                             parse_double(tokens[3], line_no)});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                             std::string(key) + "'");
        }
    }
    flush();
    if (out.empty()) throw ParseError("document has no [measured] section");
    return out;
}

std::vector<MeasuredTrajectory> load_measured(const std::filesystem::path& path) {
    return parse_measured(read_file(path));
}

std::string write_measured(const std::vector<MeasuredTrajectory>& trajectories) {
    std::ostringstream os;
    os << kMagicLine << "\n";
    for (const auto& m : trajectories) {
        os << "\n[measured]\n";
        if (!m.label.empty()) os << "label = " << m.label << "\n";
        os << "initial = " << format_number(m.initial.s0()) << " "
           << format_number(m.initial.s1()) << " " << format_number(m.initial.s2()) << " "
           << format_number(m.initial.s3()) << "\n";
        for (const auto& s : m.steps)
            os << "step = " << s.gray_level << " " << format_number(s.sx) << " "
               << format_number(s.sy) << " " << format_number(s.sz) << "\n";
    }
    return os.str();
}

void save_measured(const std::filesystem::path& path,
                   const std::vector<MeasuredTrajectory>& trajectories) {
    write_file(path, write_measured(trajectories));
}

EvolutionOperator resolve_unitaries(const TrajectorySpec& spec, const CalibrationTable& table) {
    std::vector<Unitary2> unitaries;
    unitaries.reserve(spec.gray_levels.size());
    for (int gray : spec.gray_levels) {
        const MuellerMatrix& m = table.at(gray);
        unitaries.push_back(retarder_to_unitary(lu_chipman(m).retarder));
    }
    return EvolutionOperator(std::move(unitaries));
}

HistoryState trajectory_to_history(const MeasuredTrajectory& m, double min_norm) {
    std::vector<PureQubit> states;
    states.reserve(m.steps.size());
    for (std::size_t i = 0; i < m.steps.size(); ++i) {
        try {
            states.push_back(purify(m.steps[i].bloch(), min_norm));
        } catch (const BelowPurityThreshold& e) {
            throw BelowPurityThreshold("trajectory '" + m.label + "' step " +
                                       std::to_string(i) + ": " + e.what());
        }
    }
    return HistoryState::from_states(states);
}

}  // namespace polhist
