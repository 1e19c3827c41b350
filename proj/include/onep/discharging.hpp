#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "onep/drawing.hpp"

namespace onep {

/// Exact rational charge; no floating point anywhere in the ledger.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

enum class ElementKind { Vertex, Face, Pot };

struct ElementRef {
    ElementKind kind = ElementKind::Pot;
    int id = -1;  // vertex id or face index; unused for the pot

    bool operator==(const ElementRef&) const = default;
};

std::string to_string(const ElementRef& e);

enum class Rule { R1, R2, R3, R4, R5, R6, R7, R8, R9 };

std::string to_string(Rule r);

struct Transfer {
    Rule rule;
    ElementRef from;
    ElementRef to;
    Rational amount;               // > 0
    std::optional<int> via;        // false vertex for "through w" transfers
};

/// Exact charge per vertex, per face, and the common pot.
struct ChargeLedger {
    std::vector<Rational> vertex_charge;
    std::vector<Rational> face_charge;
    Rational pot = 0;

    Rational total() const;
};

/// Initial charges: d(v)-6 on vertices, 2d(f)-6 on faces, 0 on the pot.
/// Sums to -12 on a connected drawing of genus 0.
ChargeLedger initial_charges(const OnePlanarDrawing& d);

/// Applies the nine discharging rules literally, each exactly once per
/// qualifying instance, in rule order with elements ascending. Returns the
/// transfer list and the final ledger.
std::pair<std::vector<Transfer>, ChargeLedger> run_discharging(const OnePlanarDrawing& d, int r);

struct AuditReport {
    ChargeLedger initial;
    ChargeLedger final;
    std::vector<Transfer> transfers;
    std::vector<std::pair<ElementRef, Rational>> negative_elements;
    bool connected = false;
    bool conserved = false;        // sum of final charges == -12 (connected only)
    Rational total_final = 0;
    Rational pot_balance = 0;
    std::optional<Rational> expected_pot;  // |V_Delta|/2 - |V_3| when V_3 nonempty
};

AuditReport audit(const OnePlanarDrawing& d, int r);

std::string format_audit(const AuditReport& rep, const OnePlanarDrawing& d, bool with_transfers);

/// Re-evaluates a transfer's predicate against the drawing.
bool recheck_transfer(const OnePlanarDrawing& d, int r, const Transfer& t);

/// One fan segment around a big vertex, classified into the five types.
struct Cluster {
    int type = 0;                  // 1..5
    std::vector<int> faces;        // face indices of the segment, fan order
    int false_neighbors = 0;       // s_i
    std::vector<int> members;      // owned neighbors (drawing ids)
};

struct ClusterCounts {
    std::array<int, 5> n{0, 0, 0, 0, 0};
    int d = 0;
    int m() const { return d - 2 * n[0] - n[1] - n[2] - n[3] - n[4]; }
    int boundary_weight() const { return 2 * n[0] + 2 * n[1] + n[2] + 3 * n[3] + n[4]; }
};

struct ClusterDecomposition {
    std::vector<Cluster> clusters;
    ClusterCounts counts;
    std::vector<std::string> unclassified;  // reported segments, never guessed
    bool ok() const { return unclassified.empty(); }
};

/// Partitions the facial fan around true vertex v (degree >= 8) into
/// clusters and returns the counts feeding gamma.
ClusterDecomposition decompose_clusters(const OnePlanarDrawing& d, int v);

/// Largest possible charge sent by a d-vertex with the given cluster counts;
/// formula bands: {8}, {9,10}, {11}, {12}, {>= 13}.
Rational gamma(int d_deg, const ClusterCounts& counts);

struct ProgramOptimum {
    Rational q;
    ClusterCounts argmax;
};

/// Exact optimum of the degree-d cluster program (8 <= d <= 12) by
/// enumeration of all feasible tuples. side_conditions additionally imposes
/// the boundary-tightness conditions noted for d = 9 and d = 11.
ProgramOptimum solve_cluster_program(int d_deg, bool side_conditions = false);

/// max over feasible tuples of gamma_d - (d-6) - (13-d)/2, for d >= 13;
/// nonpositive by the degree-band bound.
Rational large_degree_slack(int d_deg);

}  // namespace onep
