#include "toruscolor/io.hpp"

#include <fstream>
#include <sstream>

#include "toruscolor/errors.hpp"

namespace toruscolor {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON in " + what);
    return j;
}

int expect_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer()) throw input_error(what + " must be an integer");
    return j.get<int>();
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw input_error("edge list must start with \"n m\"");
    if (n < 0 || m < 0) throw input_error("negative counts in edge list header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw input_error("edge list ended before all edges were read");
        g.add_edge(u, v);
    }
    int extra;
    if (in >> extra) throw input_error("trailing data after the declared edges");
    return g;
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    out << g.universe() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw input_error("empty graph6 string");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw input_error("graph6 vertex count outside supported range");
    size_t need = 1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != need) throw input_error("graph6 string has the wrong length");
    Graph g(n);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw input_error("graph6 byte out of range");
            if (c >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.universe();
    if (n > 62) throw input_error("graph6 vertex count outside supported range");
    std::string s(1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6, 0);
    s[0] = static_cast<char>(n + 63);
    size_t bit = 0;
    std::vector<int> acc(s.size(), 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_vertex(i) && g.has_vertex(j) && g.has_edge(i, j))
                acc[1 + bit / 6] |= 1 << (5 - bit % 6);
    for (size_t k = 1; k < s.size(); ++k) s[k] = static_cast<char>(acc[k] + 63);
    return s;
}

Graph read_graph_file(const std::string& path, bool force_graph6) {
    std::string text = read_text_file(path);
    if (force_graph6 || text.rfind(">>graph6<<", 0) == 0) return parse_graph6(text);
    std::istringstream in(text);
    return parse_edge_list(in);
}

RotationSystem parse_rotation_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rotations"))
        throw input_error("rotation file must be {\"n\": ..., \"rotations\": ...}");
    RotationSystem r;
    r.n = expect_int(j["n"], "rotation n");
    if (r.n < 0) throw input_error("negative vertex count in rotation file");
    if (!j["rotations"].is_array() || static_cast<int>(j["rotations"].size()) != r.n)
        throw input_error("rotations must list one cyclic order per vertex");
    for (const auto& row : j["rotations"]) {
        if (!row.is_array()) throw input_error("each rotation must be an array");
        std::vector<int> order;
        for (const auto& x : row) order.push_back(expect_int(x, "rotation entry"));
        r.rot.push_back(std::move(order));
    }
    return r;
}

RotationSystem read_rotation_file(const std::string& path) {
    return parse_rotation_json(parse_json_text(read_text_file(path), path));
}

OperationTrace parse_trace_json(const nlohmann::json& j) {
    if (!j.is_array()) throw input_error("trace must be a JSON list");
    OperationTrace t;
    for (const auto& step : j) {
        if (!step.is_object() || !step.contains("op") || !step.contains("u"))
            throw input_error("each trace step needs \"op\" and \"u\"");
        Operation op;
        std::string kind = step["op"].get<std::string>();
        op.u = expect_int(step["u"], "trace u");
        if (kind == "delete") {
            op.kind = OpKind::Delete;
            if (step.contains("w")) throw input_error("delete step must not carry \"w\"");
        } else if (kind == "deletesave") {
            op.kind = OpKind::DeleteSave;
            if (!step.contains("w")) throw input_error("deletesave step needs \"w\"");
            op.w = expect_int(step["w"], "trace w");
        } else {
            throw input_error("unknown trace op \"" + kind + "\"");
        }
        t.push_back(op);
    }
    return t;
}

OperationTrace read_trace_file(const std::string& path) {
    return parse_trace_json(parse_json_text(read_text_file(path), path));
}

nlohmann::ordered_json trace_to_json(const OperationTrace& t) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& op : t) {
        nlohmann::ordered_json step;
        step["op"] = op.kind == OpKind::Delete ? "delete" : "deletesave";
        step["u"] = op.u;
        if (op.kind == OpKind::DeleteSave) step["w"] = op.w;
        out.push_back(step);
    }
    return out;
}

Orientation parse_orientation(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw input_error("orientation file must start with \"n m\"");
    if (n < 0 || m < 0) throw input_error("negative counts in orientation header");
    std::vector<std::pair<int, int>> arcs;
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        std::string gt;
        if (!(in >> u >> gt >> v) || gt != ">")
            throw input_error("each orientation line must read \"u > v\"");
        g.add_edge(u, v);
        arcs.push_back({u, v});
    }
    int extra;
    if (in >> extra) throw input_error("trailing data after the declared arcs");
    return Orientation(std::move(g), std::move(arcs));
}

Orientation read_orientation_file(const std::string& path) {
    std::istringstream in(read_text_file(path));
    return parse_orientation(in);
}

std::string orientation_string(const Orientation& d) {
    std::ostringstream out;
    out << d.graph().universe() << " " << d.arcs().size() << "\n";
    for (auto [u, v] : d.arcs()) out << u << " > " << v << "\n";
    return out.str();
}

CoverFile parse_cover_json(const nlohmann::json& j, const Graph& base) {
    if (!j.is_object() || !j.contains("lists") || !j.contains("matchings"))
        throw input_error("cover file must carry \"lists\" and \"matchings\"");
    CoverFile out;
    out.cover.base = base;
    for (const auto& x : j["lists"])
        out.cover.list_sizes.push_back(expect_int(x, "list size"));
    if (static_cast<int>(out.cover.list_sizes.size()) != base.universe())
        throw input_error("lists must give one size per vertex");
    for (const auto& mj : j["matchings"]) {
        if (!mj.is_object() || !mj.contains("edge") || !mj.contains("pairs"))
            throw input_error("each matching needs \"edge\" and \"pairs\"");
        if (!mj["edge"].is_array() || mj["edge"].size() != 2)
            throw input_error("matching edge must be [u, v]");
        CoverMatching m;
        m.edge = {expect_int(mj["edge"][0], "edge endpoint"),
                  expect_int(mj["edge"][1], "edge endpoint")};
        for (const auto& pj : mj["pairs"]) {
            if (!pj.is_array() || pj.size() != 2)
                throw input_error("matching pair must be [i, j]");
            m.pairs.push_back({expect_int(pj[0], "pair index"), expect_int(pj[1], "pair index")});
        }
        out.cover.matchings.push_back(std::move(m));
    }
    out.cover.validate();
    if (j.contains("f")) {
        CoverDegFunction f;
        for (const auto& row : j["f"]) {
            std::vector<int> vals;
            for (const auto& x : row) vals.push_back(expect_int(x, "cover degree value"));
            f.push_back(std::move(vals));
        }
        out.f = std::move(f);
    }
    return out;
}

CoverFile read_cover_file(const std::string& path, const Graph& base) {
    return parse_cover_json(parse_json_text(read_text_file(path), path), base);
}

} // namespace toruscolor
