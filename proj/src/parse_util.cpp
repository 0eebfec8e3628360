#include "froblab/parse_util.hpp"

namespace froblab {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int_strict(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw SpecError(context + ": not an integer: '" + s + "'");
        return v;
    } catch (const SpecError&) {
        throw;
    } catch (...) {
        throw SpecError(context + ": not an integer: '" + s + "'");
    }
}

}  // namespace froblab
