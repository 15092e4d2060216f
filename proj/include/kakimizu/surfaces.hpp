#pragma once

#include "kakimizu/complex.hpp"
#include "kakimizu/diagram.hpp"
#include "kakimizu/theta.hpp"

#include <utility>
#include <vector>

namespace kakimizu {

/// A diagram together with its theta pipeline and the per-crossing data
/// needed to place P-arcs.
struct SurfaceModel {
    Diagram diagram;
    ThetaPipeline pipeline;
    FaceTrace f_faces;
    /// Edge of F(D) carrying each crossing.
    std::vector<int> f_edge;
    /// White corner of each crossing on its positive side.
    std::vector<int> positive_corner;
    /// Theta coordinate of each F(D) edge id, or -1.
    std::vector<int> coordinate_of_f_edge;

    const ThetaGraph& theta() const { return pipeline.theta(); }
};

/// Throws PreconditionError unless the diagram is connected, alternating and special.
SurfaceModel make_surface_model(const Diagram& d);

/// A flype circle in F(D): the crossing edge (weight -1) and the arc edge
/// (weight +1) of one theta component. Edge ids are theta edge ids.
struct FlypeCircle {
    int component = 0;
    int crossing_edge = 0;
    int arc_edge = 0;
};

struct FlypeSet {
    std::vector<FlypeCircle> circles;
    /// Change of weights, per theta coordinate.
    std::vector<int> delta;
    /// Regions on the positive side of the circles (the set Λ).
    std::vector<int> positive_regions;

    bool empty() const { return circles.empty(); }
};

/// Pairs each -1 with the +1 on its positive side, per component.
/// Throws InvariantError when the labels do not alternate.
FlypeSet flype_set_for_edge(const ThetaGraph& t, const WeightVector& u, const RegionSet& a);

/// Pairing rule, weights at `u`, and a consistent side assignment matching positive_regions.
bool is_coherent(const ThetaGraph& t, const FlypeSet& fs, const WeightVector& u);

enum class ArcSide { Negative, Positive, Flype };

/// Side of the absent flype circles assumed for every crossing when there are
/// none. Arcs then lie on the opposite side of each crossing.
enum class EmptyConvention { AllPositive, AllNegative };

struct PArcConfig {
    /// Per crossing: where its arc lies, or Flype for a flype crossing.
    std::vector<ArcSide> crossing_arc;
    /// Every P-arc as a pair of diagram edges (0-based).
    std::vector<std::pair<int, int>> arcs;
    /// Diagram edge at the other end of each edge's P-arc.
    std::vector<int> partner;
};

/// P-arcs of the admissible description of `fs`. Throws InvariantError when
/// the arcs fail to meet every diagram edge exactly once.
PArcConfig p_arcs(const SurfaceModel& m, const FlypeSet& fs,
                  EmptyConvention convention = EmptyConvention::AllPositive);

struct CurveCounts {
    int n_a = 0; ///< curves of P-arcs and overcrossing arcs
    int n_b = 0; ///< curves of P-arcs and undercrossing arcs
};

CurveCounts trace_curves(const Diagram& d, const PArcConfig& p);

int euler_characteristic(int n, int n_a, int n_b);

/// Vertices u + ΣA over all region sets A consistent at u, sorted.
std::vector<WeightVector> neighbors_via_flypes(const ThetaGraph& t, const WeightVector& u);

struct SurfaceRealization {
    WeightVector vertex;
    FlypeSet flypes;
    PArcConfig arcs;
    CurveCounts counts;
    int chi = 0;
};

/// Surface for the base vertex or one of its neighbours in K(D).
/// Throws PreconditionError for vertices farther away.
SurfaceRealization realize(const SurfaceModel& m, const WeightVector& v,
                           EmptyConvention convention = EmptyConvention::AllPositive);

} // namespace kakimizu
