#include "gtop/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace gtop::io {

using nlohmann::json;

namespace {

struct Line {
    int number;
    std::vector<std::string> words;
};

std::vector<Line> split_lines(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::istringstream words(raw);
        Line line{n, {}};
        std::string w;
        while (words >> w)
            line.words.push_back(w);
        if (line.words.empty() || line.words.front().front() == '#')
            continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// labels in order of first appearance
class LabelTable {
public:
    int get(const std::string& label)
    {
        auto [it, fresh] = index_.emplace(label, static_cast<int>(labels_.size()));
        if (fresh)
            labels_.push_back(label);
        return it->second;
    }
    bool declare(const std::string& label)
    {
        std::size_t before = labels_.size();
        get(label);
        return labels_.size() > before;
    }
    std::vector<std::string> labels_;

private:
    std::map<std::string, int> index_;
};

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string as_label(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw ParseError("labels must be strings or integers");
}

bool looks_like_json(const std::string& text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

} // namespace

Graph parse_graph_text(const std::string& text)
{
    LabelTable table;
    std::vector<std::pair<int, int>> edges;
    for (const auto& line : split_lines(text)) {
        const auto& w = line.words;
        if (w[0] == "v") {
            if (w.size() != 2)
                fail(line.number, "expected 'v <label>'");
            if (!table.declare(w[1]))
                fail(line.number, "vertex '" + w[1] + "' declared twice");
        } else if (w[0] == "e") {
            if (w.size() != 3)
                fail(line.number, "expected 'e <label> <label>'");
            int a = table.get(w[1]);
            int b = table.get(w[2]);
            edges.emplace_back(a, b);
        } else {
            fail(line.number, "unknown record '" + w[0] + "'");
        }
    }
    return Graph::from_edges(table.labels_, edges);
}

Graph parse_graph_json(const std::string& text)
{
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices"))
        throw ParseError("graph JSON needs a 'vertices' array");
    LabelTable table;
    for (const auto& v : j.at("vertices"))
        if (!table.declare(as_label(v)))
            throw ParseError("vertex '" + as_label(v) + "' declared twice");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair");
            edges.emplace_back(table.get(as_label(e[0])), table.get(as_label(e[1])));
        }
    return Graph::from_edges(table.labels_, edges);
}

Graph parse_dimacs(const std::string& text)
{
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream words(raw);
        std::string kind;
        if (!(words >> kind) || kind == "c")
            continue;
        if (kind == "p") {
            std::string format;
            long m = 0;
            if (!(words >> format >> n >> m) || (format != "edge" && format != "col") || n < 0)
                fail(number, "expected 'p edge <n> <m>'");
        } else if (kind == "e") {
            long a = 0, b = 0;
            if (n < 0)
                fail(number, "edge before the problem line");
            if (!(words >> a >> b) || a < 1 || b < 1 || a > n || b > n)
                fail(number, "edge endpoints must lie in 1..n");
            if (a == b)
                fail(number, "loops are not allowed in DIMACS input");
            edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
        } else {
            fail(number, "unknown record '" + kind + "'");
        }
    }
    if (n < 0)
        throw ParseError("missing problem line");
    std::vector<std::string> labels;
    for (long i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return Graph::from_edges(labels, edges);
}

Graph parse_graph(const std::string& text)
{
    if (looks_like_json(text))
        return parse_graph_json(text);
    for (const auto& line : split_lines(text))
        if (line.words[0] == "p" || line.words[0] == "c")
            return parse_dimacs(text);
    return parse_graph_text(text);
}

std::string graph_to_text(const Graph& g)
{
    std::string out;
    for (const auto& l : g.labels())
        out += "v " + l + "\n";
    for (auto [a, b] : g.edges())
        out += "e " + g.label(a) + " " + g.label(b) + "\n";
    return out;
}

std::string graph_to_json(const Graph& g)
{
    json j;
    j["vertices"] = g.labels();
    j["edges"] = json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back({g.label(a), g.label(b)});
    return j.dump(2) + "\n";
}

Poset parse_poset(const std::string& text)
{
    LabelTable table;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& line : split_lines(text)) {
        const auto& w = line.words;
        if (w[0] == "el") {
            if (w.size() != 2)
                fail(line.number, "expected 'el <label>'");
            if (!table.declare(w[1]))
                fail(line.number, "element '" + w[1] + "' declared twice");
        } else if (w[0] == "le") {
            if (w.size() != 3)
                fail(line.number, "expected 'le <label> <label>'");
            pairs.emplace_back(table.get(w[1]), table.get(w[2]));
        } else {
            fail(line.number, "unknown record '" + w[0] + "'");
        }
    }
    try {
        return Poset::from_relations(table.labels_, pairs);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string poset_to_text(const Poset& p)
{
    std::string out;
    for (const auto& l : p.labels())
        out += "el " + l + "\n";
    for (auto [a, b] : p.covers())
        out += "le " + p.label(a) + " " + p.label(b) + "\n";
    return out;
}

SimplicialComplex parse_complex(const std::string& text)
{
    std::vector<std::vector<std::string>> simplices;
    if (looks_like_json(text)) {
        json j = parse_json(text);
        if (!j.is_object() || !j.contains("simplices"))
            throw ParseError("complex JSON needs a 'simplices' array");
        for (const auto& s : j.at("simplices")) {
            if (!s.is_array() || s.empty())
                throw ParseError("each simplex must be a non-empty array");
            std::vector<std::string> labels;
            for (const auto& v : s)
                labels.push_back(as_label(v));
            simplices.push_back(std::move(labels));
        }
    } else {
        for (const auto& line : split_lines(text)) {
            if (line.words[0] != "s")
                fail(line.number, "unknown record '" + line.words[0] + "'");
            if (line.words.size() < 2)
                fail(line.number, "a simplex needs at least one vertex");
            simplices.emplace_back(line.words.begin() + 1, line.words.end());
        }
    }
    try {
        return SimplicialComplex::from_labelled(simplices);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string complex_to_text(const SimplicialComplex& k)
{
    std::string out;
    for (const auto& f : k.facets()) {
        out += "s";
        for (int v : f)
            out += " " + k.label(v);
        out += "\n";
    }
    return out;
}

std::string complex_to_json(const SimplicialComplex& k)
{
    json j;
    j["simplices"] = json::array();
    for (const auto& f : k.facets()) {
        json s = json::array();
        for (int v : f)
            s.push_back(k.label(v));
        j["simplices"].push_back(s);
    }
    return j.dump(2) + "\n";
}

GroupAction parse_group(const std::string& text, const std::vector<std::string>& carrier)
{
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        index[carrier[i]] = static_cast<int>(i);
    auto to_perm = [&](const std::vector<std::string>& images, int line) {
        if (images.size() != carrier.size())
            fail(line, "a generator lists " + std::to_string(images.size()) + " images for " +
                           std::to_string(carrier.size()) + " carrier elements");
        Perm p;
        for (const auto& l : images) {
            auto it = index.find(l);
            if (it == index.end())
                fail(line, "unknown carrier label '" + l + "'");
            p.push_back(it->second);
        }
        if (!is_permutation(p))
            fail(line, "generator is not a permutation");
        return p;
    };
    std::vector<Perm> gens;
    if (looks_like_json(text)) {
        json j = parse_json(text);
        if (!j.is_object() || !j.contains("generators"))
            throw ParseError("group JSON needs a 'generators' array");
        int n = 0;
        for (const auto& g : j.at("generators")) {
            std::vector<std::string> images;
            for (const auto& v : g)
                images.push_back(as_label(v));
            gens.push_back(to_perm(images, ++n));
        }
    } else {
        for (const auto& line : split_lines(text))
            gens.push_back(to_perm(line.words, line.number));
    }
    return GroupAction::from_permutation_group(close_permutations(gens, carrier.size(), carrier));
}

std::string hom_poset_to_text(const HomPoset& hom)
{
    return poset_to_text(hom.poset);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace gtop::io
