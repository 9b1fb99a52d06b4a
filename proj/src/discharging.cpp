#include "toruscolor/discharging.hpp"

#include <stdexcept>

#include "toruscolor/errors.hpp"

namespace toruscolor {

void RuleParams::validate() const {
    if (epsilon <= 0) throw input_error("epsilon must be positive");
    if (eta <= 0) throw input_error("eta must be positive");
    if (lambda() <= 0) throw input_error("lambda must be positive");
    if (lambda() > rho) throw input_error("lambda must not exceed rho");
    if (rho >= 1) throw input_error("rho must be below 1");
}

Rational ChargeState::total() const {
    Rational t = 0;
    for (const auto& c : vertex_charge) t += c;
    for (const auto& c : face_charge) t += c;
    return t;
}

ChargeState initial_charges(const EmbeddedGraph& e) {
    ChargeState s;
    s.vertex_charge.assign(e.g.universe(), Rational(0));
    for (int v : e.g.vertices()) s.vertex_charge[v] = Rational(e.g.degree(v) - 6);
    s.face_charge.resize(e.faces.size());
    for (size_t f = 0; f < e.faces.size(); ++f)
        s.face_charge[f] = Rational(2 * e.faces[f].degree() - 6);
    return s;
}

namespace {

std::string vname(int v) { return "v" + std::to_string(v); }
std::string fname(int f) { return "f" + std::to_string(f); }

void move_charge(ChargeState& s, const std::string& rule, const std::string& from,
                 const std::string& to, const Rational& amount) {
    Rational& src = from[0] == 'v' ? s.vertex_charge[std::stoi(from.substr(1))]
                                   : s.face_charge[std::stoi(from.substr(1))];
    Rational& dst = to[0] == 'v' ? s.vertex_charge[std::stoi(to.substr(1))]
                                 : s.face_charge[std::stoi(to.substr(1))];
    src -= amount;
    dst += amount;
    s.ledger.push_back({rule, from, to, amount});
}

bool all_triangle_corners(const EmbeddedGraph& e, int v) {
    for (int d : vertex_face_pattern(e, v))
        if (d != 3) return false;
    return true;
}

bool no_triangle_corner(const EmbeddedGraph& e, int v) {
    for (int d : vertex_face_pattern(e, v))
        if (d < 4) return false;
    return true;
}

} // namespace

ChargeState apply_rules(const EmbeddedGraph& e, const RuleParams& p) {
    p.validate();
    ChargeState s = initial_charges(e);
    const Rational before = s.total();
    EmbeddingStats st = embedding_stats(e);

    for (size_t f = 0; f < e.faces.size(); ++f) {
        if (e.faces[f].degree() != 4) continue;
        bool undefined_corner = false, zero_divisor = false;
        for (const auto& [v, _] : e.faces[f].arcs) {
            int d = e.g.degree(v);
            if (d >= 5) {
                move_charge(s, "R1", fname(static_cast<int>(f)), vname(v), p.eta);
            } else if (d == 4 && st.vclass[v] == VertexClass::SPECIAL) {
                move_charge(s, "R1", fname(static_cast<int>(f)), vname(v), Rational(1));
            } else if (d == 4) {
                int divisor = st.n4[f] - st.s[f];
                if (divisor == 0) {
                    zero_divisor = true;
                    continue;
                }
                Rational amount = (Rational(2 - st.s[f]) - p.eta * st.n5p[f]) / divisor;
                move_charge(s, "R1", fname(static_cast<int>(f)), vname(v), amount);
            } else {
                undefined_corner = true;
            }
        }
        if (zero_divisor)
            s.events.push_back("R1 inapplicable on face " + std::to_string(f) +
                               ": n4(f) = s(f)");
        if (undefined_corner)
            s.events.push_back("R1 undefined for a corner of degree below 4 on face " +
                               std::to_string(f));
    }

    for (size_t f = 0; f < e.faces.size(); ++f) {
        if (e.faces[f].degree() != 5) continue;
        bool undefined_corner = false, zero_divisor = false;
        for (const auto& [v, _] : e.faces[f].arcs) {
            int d = e.g.degree(v);
            if (d >= 5) {
                move_charge(s, "R2", fname(static_cast<int>(f)), vname(v), Rational(1, 2));
            } else if (d == 4) {
                if (st.n4[f] == 0) {
                    zero_divisor = true;
                    continue;
                }
                Rational amount = (Rational(4) - Rational(st.n5p[f], 2)) / st.n4[f];
                move_charge(s, "R2", fname(static_cast<int>(f)), vname(v), amount);
            } else {
                undefined_corner = true;
            }
        }
        if (zero_divisor)
            s.events.push_back("R2 inapplicable on face " + std::to_string(f) + ": n4(f) = 0");
        if (undefined_corner)
            s.events.push_back("R2 undefined for a corner of degree below 4 on face " +
                               std::to_string(f));
    }

    for (size_t f = 0; f < e.faces.size(); ++f) {
        int d = e.faces[f].degree();
        if (d < 6) continue;
        Rational amount = Rational(2 * d - 6, d);
        for (const auto& [v, _] : e.faces[f].arcs)
            move_charge(s, "R3", fname(static_cast<int>(f)), vname(v), amount);
    }

    for (int v : e.g.vertices()) {
        if (e.g.degree(v) != 4 || !no_triangle_corner(e, v)) continue;
        for (int u : e.g.neighbors(v)) move_charge(s, "R7", vname(v), vname(u), Rational(1, 20));
    }

    s.omega_star_vertex = s.vertex_charge;
    s.omega_star_face = s.face_charge;

    for (int v : e.g.vertices()) {
        if (st.vclass[v] != VertexClass::GOOD || st.n4b[v] == 0) continue;
        Rational remaining = s.omega_star_vertex[v];
        if (remaining <= 0) continue;
        Rational share = remaining / st.n4b[v];
        for (int u : e.g.neighbors(v))
            if (st.vclass[u] == VertexClass::BAD) move_charge(s, "R4", vname(v), vname(u), share);
    }

    for (int v : e.g.vertices()) {
        if (e.g.degree(v) != 5) continue;
        for (int u : e.g.neighbors(v)) {
            if (st.vclass[u] != VertexClass::BAD) continue;
            if (all_triangle_corners(e, u))
                move_charge(s, "R5", vname(v), vname(u), p.lambda());
            else
                move_charge(s, "R5", vname(v), vname(u), p.mu());
        }
    }

    for (int v : e.g.vertices()) {
        if (e.g.degree(v) < 6) continue;
        for (int u : e.g.neighbors(v))
            if (st.vclass[u] == VertexClass::BAD) move_charge(s, "R6", vname(v), vname(u), p.rho);
    }

    if (s.total() != before) throw std::logic_error("charge conservation violated");
    return s;
}

nlohmann::ordered_json charge_report(const EmbeddedGraph& e, const ChargeState& s) {
    nlohmann::ordered_json report;
    report["total"] = rational_string(s.total());
    auto negative = nlohmann::ordered_json::array();
    for (int v : e.g.vertices())
        if (s.vertex_charge[v] < 0)
            negative.push_back({{"element", "v" + std::to_string(v)},
                                {"charge", rational_string(s.vertex_charge[v])}});
    for (size_t f = 0; f < s.face_charge.size(); ++f)
        if (s.face_charge[f] < 0)
            negative.push_back({{"element", "f" + std::to_string(f)},
                                {"charge", rational_string(s.face_charge[f])}});
    report["negative"] = negative;
    auto positive = nlohmann::ordered_json::array();
    for (int v : e.g.vertices())
        if (s.vertex_charge[v] > 0)
            positive.push_back({{"element", "v" + std::to_string(v)},
                                {"charge", rational_string(s.vertex_charge[v])}});
    report["positive"] = positive;
    auto ledger = nlohmann::ordered_json::array();
    for (const auto& t : s.ledger)
        ledger.push_back({{"rule", t.rule},
                          {"from", t.from},
                          {"to", t.to},
                          {"amount", rational_string(t.amount)}});
    report["ledger"] = ledger;
    report["events"] = s.events;
    return report;
}

} // namespace toruscolor
