#include "spg/soc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace spg {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, int line, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw SocParseError(line, std::string("expected integer for ") + what +
                                      ", got '" + trim(s) + "'");
    }
}

struct BodyLine {
    int count;
    std::vector<int> order;
};

BodyLine parse_body(const std::string& countpart, const std::string& orderpart,
                    int m, int line) {
    BodyLine b;
    b.count = parse_int(countpart, line, "vote count");
    if (b.count < 1) throw SocParseError(line, "vote count must be positive");
    for (const auto& tok : split(orderpart, ','))
        b.order.push_back(parse_int(tok, line, "candidate"));
    if (static_cast<int>(b.order.size()) != m)
        throw SocParseError(line, "ranking has " + std::to_string(b.order.size()) +
                                      " candidates, expected " + std::to_string(m));
    std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
    for (int c : b.order) {
        if (c < 1 || c > m)
            throw SocParseError(line, "candidate " + std::to_string(c) + " out of range");
        if (seen[static_cast<size_t>(c)])
            throw SocParseError(line, "candidate " + std::to_string(c) + " listed twice");
        seen[static_cast<size_t>(c)] = 1;
    }
    return b;
}

void append_entry(Profile& p, const Ranking& r, int count) {
    auto it = std::find_if(p.entries.begin(), p.entries.end(),
                           [&](const auto& e) { return e.first == r; });
    if (it != p.entries.end())
        it->second += count;
    else
        p.entries.emplace_back(r, count);
}

SocData parse_modern(const std::vector<std::string>& lines) {
    SocData data;
    int m = -1, declared_voters = -1;
    std::vector<std::pair<int, std::string>> names;
    size_t i = 0;
    for (; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        if (t.empty()) continue;
        if (t[0] != '#') break;
        std::string meta = trim(t.substr(1));
        auto colon = meta.find(':');
        if (colon == std::string::npos) continue;
        std::string key = trim(meta.substr(0, colon));
        std::string value = trim(meta.substr(colon + 1));
        if (key == "NUMBER ALTERNATIVES") {
            m = parse_int(value, static_cast<int>(i) + 1, "NUMBER ALTERNATIVES");
        } else if (key == "NUMBER VOTERS") {
            declared_voters = parse_int(value, static_cast<int>(i) + 1, "NUMBER VOTERS");
        } else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
            int idx = parse_int(key.substr(17), static_cast<int>(i) + 1,
                                "alternative index");
            names.emplace_back(idx, value);
        }
    }
    if (m < 1)
        throw SocParseError(1, "missing or invalid '# NUMBER ALTERNATIVES' header");
    if (declared_voters < 0)
        throw SocParseError(1, "missing '# NUMBER VOTERS' header");

    data.labels.assign(static_cast<size_t>(m), "");
    for (auto& [idx, name] : names) {
        if (idx < 1 || idx > m)
            throw SocParseError(1, "alternative name index out of range");
        data.labels[static_cast<size_t>(idx - 1)] = name;
    }
    for (int c = 0; c < m; ++c)
        if (data.labels[static_cast<size_t>(c)].empty())
            data.labels[static_cast<size_t>(c)] = std::to_string(c + 1);

    data.profile.m = m;
    int total = 0;
    for (; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        if (t.empty()) continue;
        int line = static_cast<int>(i) + 1;
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw SocParseError(line, "body line must look like 'count: c1,c2,...'");
        BodyLine b = parse_body(t.substr(0, colon), t.substr(colon + 1), m, line);
        append_entry(data.profile, Ranking{b.order}, b.count);
        total += b.count;
    }
    if (data.profile.entries.empty())
        throw SocParseError(static_cast<int>(lines.size()), "no ranking lines");
    if (total != declared_voters)
        throw SocParseError(static_cast<int>(lines.size()),
                            "vote counts sum to " + std::to_string(total) +
                                ", header declares " + std::to_string(declared_voters));
    return data;
}

SocData parse_legacy(const std::vector<std::string>& lines) {
    SocData data;
    size_t i = 0;
    auto next_line = [&]() -> std::pair<std::string, int> {
        while (i < lines.size() && trim(lines[i]).empty()) ++i;
        if (i >= lines.size())
            throw SocParseError(static_cast<int>(lines.size()), "unexpected end of file");
        ++i;
        return {trim(lines[i - 1]), static_cast<int>(i)};
    };

    auto [mline, mlineno] = next_line();
    int m = parse_int(mline, mlineno, "candidate count");
    if (m < 1) throw SocParseError(mlineno, "candidate count must be positive");
    data.labels.assign(static_cast<size_t>(m), "");
    for (int c = 1; c <= m; ++c) {
        auto [l, lineno] = next_line();
        auto comma = l.find(',');
        if (comma == std::string::npos)
            throw SocParseError(lineno, "expected 'index,label'");
        int idx = parse_int(l.substr(0, comma), lineno, "candidate index");
        if (idx != c)
            throw SocParseError(lineno, "candidate indices must be 1..m in order");
        data.labels[static_cast<size_t>(c - 1)] = trim(l.substr(comma + 1));
    }
    auto [counts, clineno] = next_line();
    auto parts = split(counts, ',');
    if (parts.size() != 3)
        throw SocParseError(clineno, "expected 'voters,sum_of_counts,num_unique'");
    parse_int(parts[0], clineno, "voter count");
    int sum_counts = parse_int(parts[1], clineno, "sum of counts");
    int num_unique = parse_int(parts[2], clineno, "unique count");

    data.profile.m = m;
    int total = 0, body_lines = 0;
    while (i < lines.size()) {
        auto [l, lineno] = next_line();
        if (l.empty()) continue;
        auto comma = l.find(',');
        if (comma == std::string::npos)
            throw SocParseError(lineno, "body line must look like 'count,c1,...'");
        BodyLine b = parse_body(l.substr(0, comma), l.substr(comma + 1), m, lineno);
        append_entry(data.profile, Ranking{b.order}, b.count);
        total += b.count;
        ++body_lines;
    }
    if (body_lines != num_unique)
        throw SocParseError(static_cast<int>(lines.size()),
                            "found " + std::to_string(body_lines) +
                                " ranking lines, header declares " +
                                std::to_string(num_unique));
    if (total != sum_counts)
        throw SocParseError(static_cast<int>(lines.size()),
                            "vote counts sum to " + std::to_string(total) +
                                ", header declares " + std::to_string(sum_counts));
    return data;
}

}  // namespace

SocData parse_soc(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    size_t first = 0;
    while (first < lines.size() && trim(lines[first]).empty()) ++first;
    if (first == lines.size()) throw SocParseError(1, "empty file");

    SocData data = trim(lines[first])[0] == '#' ? parse_modern(lines)
                                                : parse_legacy(lines);
    try {
        data.profile.validate();
    } catch (const std::exception& e) {
        throw SocParseError(1, e.what());
    }
    return data;
}

SocData read_soc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_soc(ss.str());
}

std::string serialize_soc(const Profile& p, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "# NUMBER ALTERNATIVES: " << p.m << '\n';
    os << "# NUMBER VOTERS: " << p.voter_count() << '\n';
    os << "# NUMBER UNIQUE ORDERS: " << p.distinct_count() << '\n';
    for (int c = 1; c <= p.m; ++c) {
        std::string name = (c <= static_cast<int>(labels.size()) &&
                            !labels[static_cast<size_t>(c - 1)].empty())
                               ? labels[static_cast<size_t>(c - 1)]
                               : std::to_string(c);
        os << "# ALTERNATIVE NAME " << c << ": " << name << '\n';
    }
    for (const auto& [r, mult] : p.entries) {
        os << mult << ": ";
        for (int k = 0; k < r.size(); ++k) {
            if (k) os << ',';
            os << r.at(k);
        }
        os << '\n';
    }
    return os.str();
}

void write_soc_file(const std::string& path, const Profile& p,
                    const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_soc(p, labels);
}

}  // namespace spg
