#pragma once

// Homeomorphism invariant of taut 2-complexes.
//
// The intrinsic one-skeleton X_1 is a graph whose vertices are the 0-strata
// and whose edges are the 1-strata (plus circle components without
// vertices). Each 2-stratum is completed to a compact surface with
// boundary; each boundary circle maps into X_1 either constantly, as a
// cover of a circle component, or along a cyclically reduced edge word.

#include "strata/chain.hpp"
#include "strata/stratify.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace strata {

/// Directed 1-stratum: `edge` is the stratum id, `dir` is +1 along the
/// stratum's generator orientation and -1 against it.
struct Letter {
    std::size_t edge = 0;
    int dir = 1;

    Letter inverse() const { return {edge, -dir}; }
    /// Edge id first, then '+' before '-'.
    auto operator<=>(const Letter& o) const {
        if (auto c = edge <=> o.edge; c != 0) return c;
        return o.dir <=> dir;
    }
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

/// Free and cyclic cancellation of adjacent inverse pairs, to a fixed point.
Word cyclically_reduce(const Word& w);

/// Least rotation of the cyclic reduction. The empty word marks a
/// null-homotopic loop.
Word canonical_word(const Word& w);

struct GraphEdge {
    std::size_t stratum = 0;
    std::size_t tail = 0;  // 0-stratum id
    std::size_t head = 0;
    bool is_loop() const { return tail == head; }
};

struct GraphInvariant {
    std::vector<std::size_t> vertices;  // 0-strata ids
    std::vector<GraphEdge> edges;       // 1-strata with endpoints
    std::vector<std::size_t> circles;   // 1-strata that are circle components
    std::map<std::size_t, std::size_t> loops_at_vertex;  // every vertex listed
};

struct ConstantAttachment {
    int level = 0;            // 0: a 0-stratum, 1: a 1-stratum
    std::size_t target = 0;   // stratum id at that level
    bool operator==(const ConstantAttachment&) const = default;
};

struct WordAttachment {
    Word letters;  // canonical; empty means null-homotopic
    bool operator==(const WordAttachment&) const = default;
};

struct CircleCoverAttachment {
    std::size_t circle = 0;
    std::size_t degree = 0;  // positive
    int direction = 1;       // relative to the circle's generator orientation
    bool operator==(const CircleCoverAttachment&) const = default;
};

using BoundaryAttachment =
    std::variant<ConstantAttachment, WordAttachment, CircleCoverAttachment>;

/// Same boundary circle traversed the other way.
BoundaryAttachment reversed(const BoundaryAttachment& a);

/// One boundary circle of a completed 2-stratum: either a cyclic sequence of
/// directed simplicial edges of X_1, or a puncture at a vertex of X_1.
struct BoundaryCircle {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<Vertex> puncture;
};

struct CompletedSurface {
    std::size_t stratum = 0;
    std::size_t vertices = 0;  // corner classes, punctures excluded
    std::size_t edges = 0;     // interior edges plus boundary sides
    std::size_t faces = 0;
    std::int64_t euler_char = 0;
    std::vector<BoundaryCircle> boundary;
};

/// Cuts the 2-stratum `id` free from X_1: triangles are glued only along
/// their edges outside X_1, and a vertex of X_1 whose surrounding corners
/// close up becomes a puncture (a boundary circle attached constantly).
CompletedSurface complete_surface(const Stratification& strat, std::size_t id);

/// Lookup tables for the 1-strata of X_1.
class OneSkeleton {
public:
    explicit OneSkeleton(const Stratification& strat);

    const GraphInvariant& graph() const { return graph_; }
    bool is_circle(std::size_t stratum) const { return circle_.at(stratum); }
    /// Directed simplicial edge as a letter contribution: stratum and +-1.
    Letter orient(Vertex from, Vertex to) const;
    /// True if the directed edge is the first edge of its arc in either
    /// traversal direction (the edge leaving the tail).
    bool is_first_edge(Vertex from, Vertex to) const;
    std::size_t length(std::size_t stratum) const { return length_.at(stratum); }

private:
    const Stratification* strat_;
    GraphInvariant graph_;
    std::vector<bool> circle_;
    std::vector<std::size_t> length_;
    std::vector<Simplex> first_edge_;
};

struct AttachingResult {
    BoundaryAttachment attachment;
    bool taut = true;
};

AttachingResult attaching(const BoundaryCircle& circle, const Stratification& strat,
                          const OneSkeleton& skeleton);

struct SurfaceData {
    std::size_t stratum = 0;
    std::int64_t euler_char = 0;
    bool orientable = false;
    std::vector<BoundaryAttachment> boundary;
};

struct OffendingCircle {
    std::size_t stratum = 0;
    BoundaryCircle circle;
};

struct TautCheck {
    bool taut = true;
    std::vector<OffendingCircle> offending;
};

TautCheck check_taut(const SimplicialComplex& complex);
TautCheck check_taut(const Stratification& strat);

class NotTautError : public std::runtime_error {
public:
    NotTautError(const std::string& what, std::vector<OffendingCircle> offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    const std::vector<OffendingCircle>& offending() const { return offending_; }

private:
    std::vector<OffendingCircle> offending_;
};

struct TautInvariant {
    GraphInvariant graph;
    std::vector<SurfaceData> surfaces;
    /// Abelianized boundary words of the orientable 2-strata in 1-strata
    /// coordinates; equals the chain complex boundary C_2 -> C_1.
    RationalMatrix boundary_matrix;
};

/// Throws NotTautError if some boundary circle backtracks, UnsupportedError
/// for dimension > 2.
TautInvariant build_invariant(const SimplicialComplex& complex);
TautInvariant build_invariant(const Stratification& strat, const CoordinateChainComplex& chain);

/// Abelianization of the boundary attachments of one surface, in the
/// coordinates of C_1 (`axes` = 1-strata ids).
std::vector<Rational> abelianize(const SurfaceData& surface, const std::vector<std::size_t>& axes);

struct MappedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    int orientation = 1;  // -1 if the generator direction is reversed
};

struct MappedSurface {
    std::size_t from = 0;
    std::size_t to = 0;
    bool reversed = false;  // orientation reversal of an orientable stratum
    /// pairs (boundary index in A, boundary index in B, traversal reversed)
    std::vector<std::tuple<std::size_t, std::size_t, bool>> boundary;
};

struct HomeomorphismCertificate {
    std::vector<std::pair<std::size_t, std::size_t>> vertices;
    std::vector<MappedEdge> edges;
    std::vector<MappedEdge> circles;
    std::vector<MappedSurface> surfaces;
};

struct HomeomorphismResult {
    bool homeomorphic = false;
    std::optional<HomeomorphismCertificate> certificate;
};

/// Exhaustive search for a graph isomorphism of the one-skeleta and a
/// matching of 2-strata and their boundary labels.
HomeomorphismResult homeomorphic(const TautInvariant& a, const TautInvariant& b);

} // namespace strata
