#pragma once

#include "kakimizu/embedded_graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kakimizu {

/// One crossing in PD notation: strand labels listed counterclockwise,
/// starting at the incoming under-strand.
struct PdCrossing {
    int id = 0;
    std::array<int, 4> pd{};
};

/// Position of an edge end at a crossing.
struct StrandEnd {
    int crossing = -1;
    int slot = -1;
};

/// Oriented link diagram stored as a 4-valent planar map.
///
/// Edges are indexed 0..2n-1 (label minus one after normalization). In the
/// underlying map, end 0 of every edge is its tail and end 1 its head.
class Diagram {
public:
    /// Builds a diagram from PD data. Accepts n >= 1; the user-facing parser
    /// additionally rejects diagrams with fewer than two crossings.
    static Diagram from_pd(std::vector<PdCrossing> crossings);

    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int num_edges() const { return 2 * num_crossings(); }
    int num_components() const { return num_components_; }

    /// Crossings with labels normalized to 1..2n.
    const std::vector<PdCrossing>& crossings() const { return crossings_; }
    /// Edge index (label - 1) at a crossing slot.
    int edge_at(int crossing, int slot) const { return crossings_.at(crossing).pd[slot] - 1; }
    StrandEnd tail(int edge) const { return tail_.at(edge); }
    StrandEnd head(int edge) const { return head_.at(edge); }
    int component_of(int edge) const { return component_.at(edge); }

    /// True when the over strand enters at slot 1 and leaves at slot 3.
    bool over_forward(int crossing) const { return over_forward_.at(crossing); }
    bool is_incoming(int crossing, int slot) const;
    /// Slot through which the strand entering at `in_slot` leaves.
    int through_slot(int crossing, int in_slot) const;
    /// Slot through which the orientation-respecting smoothing leaves after entering at `in_slot`.
    int smoothing_slot(int crossing, int in_slot) const;
    /// The two corners (k, k+2) joined by the oriented smoothing; returns the smaller.
    int smoothing_corner(int crossing) const { return over_forward(crossing) ? 1 : 0; }

    const EmbeddedGraph& map() const { return map_; }
    const FaceTrace& faces() const { return faces_; }
    int num_faces() const { return faces_.num_faces(); }
    /// Face containing corner k (between slots k and k+1) of a crossing.
    int face_at(int crossing, int corner) const { return faces_.face_at_corner[crossing][corner]; }

    /// Crossings at which some face meets two corners.
    std::vector<int> nugatory_crossings() const;
    bool is_connected() const { return faces_.components == 1; }

    /// Diagram obtained by the orientation-respecting smoothing of one crossing.
    /// Empty when the smoothing leaves a crossingless circle.
    std::optional<Diagram> smooth(int crossing) const;

private:
    std::vector<PdCrossing> crossings_;
    std::vector<StrandEnd> tail_;
    std::vector<StrandEnd> head_;
    std::vector<int> component_;
    std::vector<bool> over_forward_;
    int num_components_ = 0;
    EmbeddedGraph map_;
    FaceTrace faces_;
};

struct ValidationReport {
    bool connected = false;
    bool alternating = false;
    bool special = false;
    bool reduced = false;
    bool prime = false;
    bool cuttable_region_exists = false;
    std::vector<std::string> messages;

    bool all() const {
        return connected && alternating && special && reduced && prime && cuttable_region_exists;
    }
};

struct SeifertData {
    /// Each circle as its cyclic sequence of edge labels (1-based).
    std::vector<std::vector<int>> circles;
    int s = 0;
    int n = 0;
    std::vector<int> black_regions;
    std::vector<int> white_regions;
    int chi = 0;
    int genus_like = 0;
};

/// Parses the diagram JSON document. Rejects fewer than two crossings.
Diagram parse_diagram(const std::string& text);
std::string diagram_to_json(const Diagram& d);

ValidationReport validate(const Diagram& d);

/// Face colours: 0 for faces containing oriented-smoothing corners, 1 otherwise.
/// Empty when the smoothing corners do not lie in one colour class.
std::optional<std::vector<int>> checkerboard(const Diagram& d);

bool is_alternating(const Diagram& d);
/// Prime as a link: no two edges cut off crossings that survive reduction on both sides.
bool is_prime(const Diagram& d);

SeifertData seifert(const Diagram& d);

/// One vertex per black region, one edge per crossing. Vertex orientations
/// come from the Seifert circle around each region.
EmbeddedGraph black_region_graph(const Diagram& d);
/// One vertex per white region, one edge per crossing.
EmbeddedGraph white_region_graph(const Diagram& d);

/// Black-region vertex of each face (-1 for white faces), matching black_region_graph.
std::vector<int> black_vertex_of_face(const Diagram& d);

/// Reduces by loop deletion and contraction at valence-2 vertices.
bool is_fibred(const EmbeddedGraph& g);

} // namespace kakimizu
