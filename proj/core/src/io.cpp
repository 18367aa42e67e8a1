#include "gridhfk/io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

struct Token {
    std::string text;
    int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
        } else {
            Token t{"", line, col};
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
                t.text += text[i++];
                ++col;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::string where(const std::string& origin, int line, int col) {
    return origin + ":" + std::to_string(line) + ":" + std::to_string(col);
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

GridDiagram parse_grid(const std::string& text, const std::string& origin) {
    const auto tok = tokenize(text);
    std::size_t pos = 0;
    auto next_int = [&](const char* what) {
        if (pos >= tok.size())
            throw Error(ErrorCode::ParseError, origin + ": expected " + what + ", got end of input");
        const Token& t = tok[pos++];
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t.text, &used);
        } catch (...) {
            used = 0;
        }
        if (used != t.text.size() || t.text.empty())
            throw Error(ErrorCode::ParseError, where(origin, t.line, t.col) + ": expected " + what + ", got '" + t.text + "'");
        return v;
    };
    const int n = next_int("the grid size");
    if (n < 2 || n > 64) throw Error(ErrorCode::ParseError, origin + ": grid size " + std::to_string(n) + " out of range");
    std::vector<int> xs(n), os(n);
    for (int& v : xs) v = next_int("an x_perm entry");
    for (int& v : os) v = next_int("an o_perm entry");
    if (pos < tok.size())
        throw Error(ErrorCode::ParseError,
                    where(origin, tok[pos].line, tok[pos].col) + ": unexpected trailing token '" + tok[pos].text + "'");
    return new_grid(n, std::move(xs), std::move(os));
}

GridDiagram read_grid_file(const std::filesystem::path& p) {
    auto g = parse_grid(read_file(p), p.string());
    g.set_name(p.stem().string());
    return g;
}

std::string format_grid(const GridDiagram& g) {
    std::ostringstream os;
    if (!g.name().empty()) os << "# " << g.name() << '\n';
    os << g.n() << '\n';
    for (int c = 0; c < g.n(); ++c) os << (c ? " " : "") << g.xs()[c];
    os << '\n';
    for (int c = 0; c < g.n(); ++c) os << (c ? " " : "") << g.os()[c];
    os << '\n';
    return os.str();
}

MoveScript parse_script(const std::string& text, const std::filesystem::path& base_dir, const std::string& origin) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool started = false;
    MoveScript s;
    GridDiagram cur;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (l.empty()) continue;
        const std::string at = origin + ":" + std::to_string(line);
        if (!started) {
            if (l.rfind("start ", 0) != 0)
                throw Error(ErrorCode::ParseError, at + ": a script must begin with 'start <grid file>' or 'start library <name>'");
            const std::string rest = trim(l.substr(6));
            if (rest.rfind("library ", 0) == 0) {
                s.start = builtin_library(trim(rest.substr(8)));
            } else {
                std::filesystem::path p(rest);
                if (p.is_relative()) p = base_dir / p;
                s.start = read_grid_file(p);
            }
            cur = s.start;
            started = true;
            continue;
        }
        GridMove m;
        try {
            m = GridMove::parse(l);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, at + ": " + e.what());
        }
        if (!is_legal(cur, m))
            throw Error(ErrorCode::IllegalMove, at + ": " + m.to_string() + " is not legal on the current grid");
        cur = apply_move(cur, m);
        s.moves.push_back(m);
    }
    if (!started) throw Error(ErrorCode::ParseError, origin + ": empty script");
    return s;
}

MoveScript read_script_file(const std::filesystem::path& p) {
    return parse_script(read_file(p), p.parent_path(), p.string());
}

std::string format_script(const MoveScript& s, const std::string& start_line) {
    std::ostringstream os;
    os << start_line << '\n';
    for (const auto& m : s.moves) os << m.to_string() << '\n';
    return os.str();
}

nlohmann::json to_json(const BigradedDims& d) {
    nlohmann::json ranks = nlohmann::json::array();
    for (const auto& [b, r] : d.ranks) ranks.push_back({b.maslov, b.alexander, r});
    return {{"ranks", ranks}};
}

BigradedDims dims_from_json(const nlohmann::json& j) {
    BigradedDims d;
    try {
        for (const auto& e : j.at("ranks")) d.add({e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad ranks table: ") + e.what());
    }
    return d;
}

nlohmann::json to_json(const MinusTable& t) {
    auto j = to_json(t.ranks);
    j["tail"] = {{"step", {t.tail_step.maslov, t.tail_step.alexander}},
                 {"from", {t.tail_from.maslov, t.tail_from.alexander}},
                 {"depth", t.tail_depth}};
    return j;
}

nlohmann::json to_json(const ClassicalInvariants& c) { return {{"tb", c.tb}, {"rot", c.rot}, {"sl", c.sl}}; }

nlohmann::json to_json(const HomologyClass& c) {
    nlohmann::json coords = nlohmann::json::array();
    for (auto v : c.coords) coords.push_back(static_cast<int>(v));
    return {{"maslov", c.bigrading.maslov}, {"alexander", c.bigrading.alexander}, {"coords", coords},
            {"nonzero", !c.is_zero()}};
}

nlohmann::json legendrian_report_json(const GridDiagram& g, const GradingReport& r, bool plus_nonzero,
                                      bool minus_nonzero) {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& i : r.identities) ids.push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"ok", i.ok}});
    return {{"grid", {{"name", g.name()}, {"n", g.n()}, {"x_perm", g.xs()}, {"o_perm", g.os()}}},
            {"tb", r.classical.tb},
            {"rot", r.classical.rot},
            {"sl", r.classical.sl},
            {"x_plus", {{"maslov", r.plus.maslov}, {"alexander", r.plus.alexander}, {"nonzero", plus_nonzero}}},
            {"x_minus", {{"maslov", r.minus.maslov}, {"alexander", r.minus.alexander}, {"nonzero", minus_nonzero}}},
            {"identities", ids}};
}

namespace {

constexpr char kMagic[8] = {'G', 'H', 'F', 'K', 'S', 'L', 'C', '1'};

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& in, T& v) {
    return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), sizeof v));
}

}  // namespace

std::string cache_key(const GridDiagram& g, const std::set<int>& filter) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::int64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= static_cast<std::uint64_t>(v >> (8 * k)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(g.n());
    for (int v : g.xs()) mix(v);
    for (int v : g.os()) mix(v);
    mix(static_cast<std::int64_t>(filter.size()));
    for (int a : filter) mix(a);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void write_slice_cache(const SlicedComplex& c, const std::filesystem::path& file) {
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCode::ParseError, "cannot write " + file.string());
    os.write(kMagic, sizeof kMagic);
    const std::string key = cache_key(c.grid(), c.alexander_filter());
    put<std::uint32_t>(os, static_cast<std::uint32_t>(key.size()));
    os.write(key.data(), static_cast<std::streamsize>(key.size()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(c.slices().size()));
    for (const auto& [b, s] : c.slices()) {
        put<std::int32_t>(os, b.maslov);
        put<std::int32_t>(os, b.alexander);
        put<std::uint64_t>(os, s.states.size());
        os.write(reinterpret_cast<const char*>(s.states.data()), static_cast<std::streamsize>(s.states.size() * sizeof(StateKey)));
        put<std::uint64_t>(os, s.boundary_out.rows());
        for (std::size_t j = 0; j < s.boundary_out.cols(); ++j) {
            const auto& col = s.boundary_out.column(j);
            put<std::uint32_t>(os, static_cast<std::uint32_t>(col.size()));
            os.write(reinterpret_cast<const char*>(col.data()), static_cast<std::streamsize>(col.size() * sizeof(std::uint32_t)));
        }
    }
}

std::optional<SlicedComplex> read_slice_cache(const GridDiagram& g, const std::set<int>& filter,
                                              const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0) return std::nullopt;
    std::uint32_t klen = 0;
    if (!get(in, klen) || klen > 64) return std::nullopt;
    std::string key(klen, '\0');
    if (!in.read(key.data(), klen) || key != cache_key(g, filter)) return std::nullopt;
    std::uint32_t count = 0;
    if (!get(in, count)) return std::nullopt;
    const std::uint64_t max_states = factorial(g.n());
    std::map<Bigrading, ComplexSlice> slices;
    for (std::uint32_t k = 0; k < count; ++k) {
        ComplexSlice s;
        std::int32_t m = 0, a = 0;
        std::uint64_t size = 0, rows = 0;
        if (!get(in, m) || !get(in, a) || !get(in, size) || size > max_states) return std::nullopt;
        s.bigrading = {m, a};
        s.states.resize(size);
        if (!in.read(reinterpret_cast<char*>(s.states.data()), static_cast<std::streamsize>(size * sizeof(StateKey))))
            return std::nullopt;
        if (!get(in, rows) || rows > max_states) return std::nullopt;
        SparseBoolMatrix d(rows, size);
        for (std::uint64_t j = 0; j < size; ++j) {
            std::uint32_t len = 0;
            if (!get(in, len) || len > rows) return std::nullopt;
            SparseVec col(len);
            if (!in.read(reinterpret_cast<char*>(col.data()), static_cast<std::streamsize>(len * sizeof(std::uint32_t))))
                return std::nullopt;
            d.set_column(j, std::move(col));
        }
        s.boundary_out = std::move(d);
        slices.emplace(s.bigrading, std::move(s));
    }
    return assemble_slices(g, std::move(slices), filter);
}

SlicedComplex build_slices_cached(const GridDiagram& g, const BuildOptions& opt,
                                  const std::optional<std::filesystem::path>& cache_dir) {
    if (!cache_dir) return build_slices(g, opt);
    const auto file = *cache_dir / (cache_key(g, opt.alexander) + ".slices");
    if (auto c = read_slice_cache(g, opt.alexander, file)) return std::move(*c);
    check_size(g, opt.max_n);
    auto c = build_slices(g, opt);
    std::filesystem::create_directories(*cache_dir);
    write_slice_cache(c, file);
    return c;
}

}  // namespace gridhfk
