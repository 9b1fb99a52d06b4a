#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toruscolor/embedding.hpp"
#include "toruscolor/rational.hpp"

namespace toruscolor {

// Transfer parameters. lambda and mu are tied to epsilon; eta and rho are
// free within 0 < lambda <= rho < 1.
struct RuleParams {
    Rational epsilon = Rational(1, 1000);
    Rational eta = Rational(1, 1000);
    Rational rho = Rational(5, 7) + Rational(1, 2000);

    Rational lambda() const { return Rational(5, 7) + epsilon / 2; }
    Rational mu() const { return Rational(4, 7) - epsilon; }
    void validate() const; // input_error when a constraint fails
};

struct Transfer {
    std::string rule; // "R1".."R7"
    std::string from; // "v<id>" or "f<index>"
    std::string to;
    Rational amount;
};

struct ChargeState {
    std::vector<Rational> vertex_charge; // by vertex id
    std::vector<Rational> face_charge;   // by face index
    // snapshot after the face rules and R7, before R4/R5/R6
    std::vector<Rational> omega_star_vertex;
    std::vector<Rational> omega_star_face;
    std::vector<Transfer> ledger;
    std::vector<std::string> events; // rule inapplicability notes

    Rational total() const;
};

// vertex charge d(v) - 6, face charge 2d(f) - 6; total is -6 (2 - 2g)
ChargeState initial_charges(const EmbeddedGraph& e);

// Two stages. Stage one: each 4-face sends eta per 5+-corner, 1 per special
// corner, (2 - s(f) - eta n5+(f)) / (n4(f) - s(f)) per remaining 4-corner;
// each 5-face sends 1/2 per 5+-corner and (4 - n5+(f)/2) / n4(f) per
// 4-corner; each 6+-face sends (2d(f) - 6)/d(f) per corner; each 4-vertex
// with no incident 3-face sends 1/20 to every neighbor. Stage two, from the
// stage-one snapshot: each good 4-vertex splits max(0, omega*) equally among
// adjacent bad 4-vertices; each 5-vertex sends lambda per adjacent
// all-triangle bad vertex and mu per other adjacent bad vertex; each
// 6+-vertex sends rho per adjacent bad vertex. Exact arithmetic throughout;
// a vanishing divisor is recorded as an event and moves no charge.
ChargeState apply_rules(const EmbeddedGraph& e, const RuleParams& p = {});

// {"total", "negative", "positive", "ledger", "events"}; rationals as "p/q".
// negative lists vertices then faces with final charge < 0; positive lists
// vertices with final charge > 0.
nlohmann::ordered_json charge_report(const EmbeddedGraph& e, const ChargeState& s);

} // namespace toruscolor
