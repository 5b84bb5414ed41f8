#include "comblock/scenario_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

namespace comblock {

std::vector<KeyEvent> parse_scenario(std::istream& in) {
    std::vector<KeyEvent> events;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::istringstream fields(line);
        std::string t_text, key_text, extra;
        if (!(fields >> t_text)) continue;  // blank or comment-only
        if (!(fields >> key_text)) throw ScenarioParseError(lineno, "expected '<t_ms> <key-digit>'");
        if (fields >> extra) throw ScenarioParseError(lineno, "unexpected trailing field '" + extra + "'");

        std::int64_t t = 0;
        const auto [tp, tec] = std::from_chars(t_text.data(), t_text.data() + t_text.size(), t);
        if (tec != std::errc{} || tp != t_text.data() + t_text.size())
            throw ScenarioParseError(lineno, "'" + t_text + "' is not an integer millisecond time");

        if (key_text.size() != 1 || key_text[0] < '0' || key_text[0] > '9')
            throw ScenarioParseError(lineno, "'" + key_text + "' is not a key digit 0-9");

        events.push_back({Millis(t), KeyId(key_text[0] - '0')});
    }
    return events;
}

std::vector<KeyEvent> load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path.string() + "'");
    return parse_scenario(in);
}

}  // namespace comblock
