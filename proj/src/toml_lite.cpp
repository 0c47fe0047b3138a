#include "spinobstruct/toml_lite.hpp"

#include "spinobstruct/polynomial.hpp" // parse_error

#include <cctype>
#include <sstream>

namespace spinobstruct {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Remove a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            in_str = !in_str;
        else if (line[i] == '#' && !in_str)
            return line.substr(0, i);
    }
    return line;
}

json parse_scalar(const std::string& raw) {
    std::string v = strip(raw);
    if (v.empty())
        throw parse_error("toml: empty value");
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"')
            throw parse_error("toml: unterminated string: " + v);
        return json(v.substr(1, v.size() - 2));
    }
    if (v == "true")
        return json(true);
    if (v == "false")
        return json(false);
    // integer
    size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    for (; i < v.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(v[i])))
            throw parse_error("toml: unsupported value: " + v);
    return json(std::stoll(v));
}

json parse_value(const std::string& raw) {
    std::string v = strip(raw);
    if (!v.empty() && v.front() == '[') {
        if (v.back() != ']')
            throw parse_error("toml: unterminated array: " + v);
        json arr = json::array();
        std::string inner = v.substr(1, v.size() - 2);
        std::string cur;
        bool in_str = false;
        for (char ch : inner) {
            if (ch == '"')
                in_str = !in_str;
            if (ch == ',' && !in_str) {
                if (!strip(cur).empty())
                    arr.push_back(parse_scalar(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!strip(cur).empty())
            arr.push_back(parse_scalar(cur));
        return arr;
    }
    return parse_scalar(v);
}

} // namespace

json toml_lite_parse(const std::string& text) {
    json root = json::object();
    json* current = &root;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(strip_comment(line));
        if (s.empty())
            continue;
        if (s.size() >= 4 && s.substr(0, 2) == "[[" && s.substr(s.size() - 2) == "]]") {
            std::string name = strip(s.substr(2, s.size() - 4));
            if (name.empty() || name.find('.') != std::string::npos)
                throw parse_error("toml: bad array-of-tables header at line " + std::to_string(lineno));
            if (!root.contains(name))
                root[name] = json::array();
            if (!root[name].is_array())
                throw parse_error("toml: '" + name + "' redefined as array of tables");
            root[name].push_back(json::object());
            current = &root[name].back();
            continue;
        }
        if (s.front() == '[' && s.back() == ']') {
            std::string name = strip(s.substr(1, s.size() - 2));
            if (name.empty() || name.find('.') != std::string::npos)
                throw parse_error("toml: bad table header at line " + std::to_string(lineno));
            if (root.contains(name))
                throw parse_error("toml: table '" + name + "' redefined");
            root[name] = json::object();
            current = &root[name];
            continue;
        }
        size_t eq = std::string::npos;
        bool in_str = false;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '"')
                in_str = !in_str;
            else if (s[i] == '=' && !in_str) {
                eq = i;
                break;
            }
        }
        if (eq == std::string::npos)
            throw parse_error("toml: expected key = value at line " + std::to_string(lineno));
        std::string key = strip(s.substr(0, eq));
        if (key.empty())
            throw parse_error("toml: empty key at line " + std::to_string(lineno));
        (*current)[key] = parse_value(s.substr(eq + 1));
    }
    return root;
}

} // namespace spinobstruct
