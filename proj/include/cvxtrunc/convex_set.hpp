#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "cvxtrunc/support_value.hpp"
#include "cvxtrunc/vec.hpp"

namespace cvxtrunc {

// ---------------------------------------------------------------------------
// set representations

struct HPolyhedron {
    Matrix A;
    Vec b;
};

/// conv(vertices) + cone(rays); the V-representation is itself a Motzkin
/// decomposition.
struct VPolyhedron {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};

/// {x in R^2 : x1 x2 >= 1, x1 >= 0}, the epigraph of 1/x on the positive axis.
struct HyperbolaEpigraph {};

/// scale * {x in R^2 : x2 >= x1^2} = {x : x2 >= x1^2 / scale}.
struct ParabolaEpigraph {
    double scale = 1.0;
};

/// The 3D set (P x {0}) + cl cone(P x {1}) built over the unit parabola
/// epigraph P. Closed form: {x in R^3 : x3 >= 0, (1 + x3) x2 >= x1^2}.
struct ConeLift3D {};

class ConvexSet;

struct TruncationOf {
    std::shared_ptr<const ConvexSet> base;
    double radius = 0.0;
};

/// Tagged union of the supported set representations. Every represented set
/// is nonempty, closed and convex; H-polyhedra are feasibility-checked at
/// construction. Immutable after construction, safe to query concurrently.
class ConvexSet {
public:
    using Variant =
        std::variant<HPolyhedron, VPolyhedron, HyperbolaEpigraph, ParabolaEpigraph,
                     ConeLift3D, TruncationOf>;

    static ConvexSet h_polyhedron(Matrix A, Vec b, const Tolerance& tol);
    static ConvexSet v_polyhedron(std::vector<Vec> vertices, std::vector<Vec> rays);
    static ConvexSet hyperbola_epigraph();
    static ConvexSet parabola_epigraph(double scale);
    static ConvexSet cone_lift_3d();
    /// Truncations do not nest: a truncation base must not itself be one.
    static ConvexSet truncation(ConvexSet base, double radius);

    int dimension() const { return dim_; }
    const Variant& data() const { return v_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&v_);
    }

private:
    ConvexSet(Variant v, int dim) : v_(std::move(v)), dim_(dim) {}
    Variant v_;
    int dim_;
};

// ---------------------------------------------------------------------------
// recession cones

struct ConeDescriptor {
    enum class Kind { HCone, GeneratedCone, VerticalRay2D, Orthant2D, LiftedCone3D };
    Kind kind = Kind::GeneratedCone;
    int dim = 0;
    Matrix A;                // HCone
    std::vector<Vec> rays;   // GeneratedCone

    static ConeDescriptor h_cone(Matrix A);
    static ConeDescriptor generated(std::vector<Vec> rays, int dim);
    static ConeDescriptor vertical_ray_2d();
    static ConeDescriptor orthant_2d();
    static ConeDescriptor lifted_cone_3d();
};

/// y in polar(cone), i.e. y^T x <= 0 for all x in the cone (at tolerance).
bool polar_membership(const ConeDescriptor& cone, const Vec& y, const Tolerance& tol);

/// x in cone (at tolerance).
bool cone_contains(const ConeDescriptor& cone, const Vec& x, const Tolerance& tol);

/// All descriptor kinds except LiftedCone3D describe polyhedral cones.
bool is_polyhedral(const ConeDescriptor& cone);

/// Whether the cone is {0} (at tolerance); decides domain fullness.
bool cone_is_trivial(const ConeDescriptor& cone, const Tolerance& tol);

/// Euclidean projection onto the cone.
Vec project_onto_cone(const ConeDescriptor& cone, const Vec& z, const Tolerance& tol);

// ---------------------------------------------------------------------------
// support function domains

/// Closed-form description of dom sigma_C. The closure of the domain always
/// equals the polar of the recession cone; is_closed records whether the
/// domain itself is closed (the parabola's is not).
struct DomainDescriptor {
    enum class Kind {
        FullSpace,
        ThirdQuadrant2D,   // hyperbola: d <= 0
        LowerHalfPlane2D,  // polar of the vertical ray: d2 <= 0
        ParabolaOpen2D,    // {d2 < 0} united with {0}
        LiftedPolar3D,     // sigma_P((d1,d2)) + d3 <= 0
        PolarOfHCone,
        PolarOfGeneratedCone,
    };

    Kind kind = Kind::FullSpace;
    int dim = 0;
    bool is_closed = true;
    bool closure_is_polar_recession = true;
    Matrix cone_A;
    std::vector<Vec> cone_rays;

    bool contains(const Vec& d, const Tolerance& tol) const;
    bool full_space() const { return kind == Kind::FullSpace; }
    /// Relative openness of (domain intersected with the unit sphere); used
    /// by the continuity classification.
    bool open_on_unit_sphere() const {
        return kind == Kind::FullSpace || kind == Kind::ParabolaOpen2D;
    }
    /// Unit directions on or near the relative boundary of the domain,
    /// used to steer estimator refinement.
    std::vector<Vec> boundary_hints() const;
};

enum class DomainCompare { Equal, Distinct, Unknown };

struct DomainComparison {
    DomainCompare verdict = DomainCompare::Unknown;
    Vec witness;  // Distinct only: a unit direction in exactly one domain
};

/// Symbolic comparison of two domain descriptors. Unknown means the pair can
/// only be compared by sampling.
DomainComparison compare_domains(const DomainDescriptor& a, const DomainDescriptor& b);

// ---------------------------------------------------------------------------
// operations

SupportValue support(const ConvexSet& s, const Vec& d, const Tolerance& tol);
bool membership(const ConvexSet& s, const Vec& x, const Tolerance& tol);
double distance_to_set(const ConvexSet& s, const Vec& x, const Tolerance& tol);
/// Euclidean projection onto the set (the point realizing distance_to_set).
Vec project_onto_set(const ConvexSet& s, const Vec& x, const Tolerance& tol);
ConeDescriptor recession_cone(const ConvexSet& s);
DomainDescriptor domain_descriptor(const ConvexSet& s);

}  // namespace cvxtrunc
