#include "subhit/io.hpp"

#include "subhit/caps.hpp"
#include "subhit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace subhit {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    return in;
}

bool data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_gr(std::istream& in) {
    std::string line;
    if (!data_line(in, line))
        throw ParseError("gr: missing header");
    std::istringstream hs(line);
    std::string p, desc;
    long long n = -1, m = -1;
    if (!(hs >> p >> desc >> n >> m) || p != "p" || n < 0 || m < 0)
        throw ParseError("gr: bad header: " + line);
    Graph g(static_cast<int>(n));
    long long edges = 0;
    while (data_line(in, line)) {
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw ParseError("gr: bad edge line: " + line);
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("gr: vertex out of range: " + line);
        if (u == v)
            throw ParseError("gr: loop edge: " + line);
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++edges;
    }
    if (edges != m)
        throw ParseError("gr: header announces " + std::to_string(m) +
                         " edges, file has " + std::to_string(edges));
    return g;
}

Graph read_gr_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g, const std::string& descriptor) {
    out << "p " << descriptor << ' ' << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
}

std::vector<int> read_coloring(std::istream& in, int n) {
    std::vector<int> color(n, -1);
    std::string line;
    while (data_line(in, line)) {
        std::istringstream cs(line);
        long long v, c;
        if (!(cs >> v >> c))
            throw ParseError("coloring: bad line: " + line);
        if (v < 1 || v > n)
            throw ParseError("coloring: vertex out of range: " + line);
        if (c < 1)
            throw ParseError("coloring: colors are 1-based: " + line);
        if (color[v - 1] != -1)
            throw ParseError("coloring: vertex colored twice: " + line);
        color[v - 1] = static_cast<int>(c - 1);
    }
    for (int v = 0; v < n; ++v)
        if (color[v] == -1)
            throw ParseError("coloring: vertex " + std::to_string(v + 1) +
                             " has no color");
    return color;
}

std::vector<int> read_coloring_file(const std::string& path, int n) {
    auto in = open_or_throw(path);
    return read_coloring(in, n);
}

void write_coloring(std::ostream& out, const std::vector<int>& color) {
    for (std::size_t v = 0; v < color.size(); ++v)
        out << v + 1 << ' ' << color[v] + 1 << '\n';
}

TreeDecomposition read_td(std::istream& in, int* declared_n) {
    std::string line;
    if (!data_line(in, line))
        throw ParseError("td: missing header");
    std::istringstream hs(line);
    std::string s, td_tag;
    long long bags = -1, bagsize = -1, n = -1;
    if (!(hs >> s >> td_tag >> bags >> bagsize >> n) || s != "s" ||
        td_tag != "td" || bags < 0 || bagsize < 0 || n < 0)
        throw ParseError("td: bad header: " + line);
    if (declared_n)
        *declared_n = static_cast<int>(n);
    TreeDecomposition td;
    td.bags.assign(static_cast<std::size_t>(bags), {});
    std::vector<char> seen(static_cast<std::size_t>(bags), 0);
    while (data_line(in, line)) {
        std::istringstream ls(line);
        if (line[0] == 'b') {
            char b;
            long long id;
            if (!(ls >> b >> id) || id < 1 || id > bags)
                throw ParseError("td: bad bag line: " + line);
            if (seen[id - 1])
                throw ParseError("td: duplicate bag id: " + line);
            seen[id - 1] = 1;
            long long v;
            auto& bag = td.bags[id - 1];
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw ParseError("td: bag vertex out of range: " + line);
                bag.push_back(static_cast<int>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw ParseError("td: duplicate vertex in bag: " + line);
            if (static_cast<long long>(bag.size()) > bagsize)
                throw ParseError("td: bag larger than declared width: " + line);
        } else {
            long long a, b2;
            if (!(ls >> a >> b2) || a < 1 || b2 < 1 || a > bags || b2 > bags)
                throw ParseError("td: bad tree edge line: " + line);
            td.tree_edges.emplace_back(static_cast<int>(a - 1),
                                       static_cast<int>(b2 - 1));
        }
    }
    for (long long i = 0; i < bags; ++i)
        if (!seen[i])
            throw ParseError("td: bag " + std::to_string(i + 1) + " missing");
    return td;
}

TreeDecomposition read_td_file(const std::string& path, int* declared_n) {
    auto in = open_or_throw(path);
    return read_td(in, declared_n);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
    std::size_t maxbag = 0;
    for (const auto& b : td.bags)
        maxbag = std::max(maxbag, b.size());
    out << "s td " << td.bags.size() << ' ' << maxbag << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i])
            out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges)
        out << a + 1 << ' ' << b + 1 << '\n';
}

Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("SUBHIT_CAPS");
    if (!env || !*env)
        return caps;
    std::istringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("SUBHIT_CAPS: expected key=value, got: " + item);
        std::string key = item.substr(0, eq);
        long long val = 0;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("SUBHIT_CAPS: bad value in: " + item);
        }
        if (val <= 0)
            throw ParseError("SUBHIT_CAPS: caps must be positive: " + item);
        if (key == "pattern_vertices")
            caps.pattern_vertices = static_cast<int>(val);
        else if (key == "oracle_vertices")
            caps.oracle_vertices = static_cast<int>(val);
        else if (key == "witness_vertices")
            caps.witness_vertices = static_cast<int>(val);
        else if (key == "state_limit")
            caps.state_limit = val;
        else
            throw ParseError("SUBHIT_CAPS: unknown key: " + key);
    }
    return caps;
}

} // namespace subhit
