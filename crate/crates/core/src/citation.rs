//! Fixed registry of the theorems used to back verdicts.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// A degree-`k` minimal generator exists iff some degree-`k` fiber is
    /// disconnected under the shared-factor relation.
    FiberCriterion,
    /// An `Omega` with `K[V]_2 = R_{2d}` has toric ideal generated in degrees <= 3.
    TwoNormalGenerationBound,
    /// Support-bounded sets with `s >= ceil((n+2)/2)` and single-monomial
    /// complements are 2-normal.
    TwoNormalFamilies,
    /// `PV(n,d,s)` is quadratic for `s >= ceil((n+2)/2)`.
    PinchedVeroneseQuadratic,
    /// The invariants `B_t` generate in degree <= 3.
    GroupGenerationBound,
    /// Cyclic surface groups are quadratic iff the gcd inequality is strict.
    SurfaceGcdCriterion,
    /// `<M_{d;0,1,2,3}>` is quadratic iff `d` is even.
    ThreefoldParity,
    /// A cyclic surface group is quadratic iff Koszul iff `B_1` has a
    /// non-pure-power invariant supported on two variables.
    SurfaceSupportTwoKoszul,
    /// Non-cyclic surface groups give Koszul algebras.
    NonCyclicSurfaceKoszul,
    /// Surface groups with two equal weights are G-quadratic.
    EqualWeightsGQuadratic,
    /// Surface groups with `d` even and `gcd(d,k) = 1` for weights `(0,1,k)`,
    /// or with a common divisor `gcd(d, a1, a2) > 1`, are G-quadratic.
    GroupVeroneseGQuadratic,
    /// `<M_{d;0,1,k}>` with `d = t k (k-1)` has a quadratic Groebner basis for
    /// the `(r,c)` lexicographic order.
    RcOrderQuadraticGb,
    /// Lifting along `x_ij -> x_i` preserves Groebner degree bounds.
    LiftPreservesGb,
    /// Block-diagonal extensions of G-quadratic surface groups stay G-quadratic.
    BlockGroupsGQuadratic,
    /// Sets of monomials having an exponent above `lambda` are Koszul under an
    /// inequality between `s`, `lambda` and `n`.
    LargeExponentKoszul,
    /// `M_{n,d}` minus `(x_0...x_n)^lambda` for `d = lambda(n+1)` or
    /// `d = lambda(n+1) - 1` is Koszul.
    CubeComplementKoszul,
    /// `PV(2,3,2)` is Koszul.
    PinchedSurfaceKoszul,
    /// The full Veronese algebra is G-quadratic.
    FullVeroneseGQuadratic,
    /// A Groebner basis has elements in every degree carrying minimal generators.
    GbDominatesGenerators,
    /// `<M_{4;0,1,2,3}>` has a quadratic Groebner basis under a RevLex order.
    ThreefoldRevLexExample,
}

impl Citation {
    pub const ALL: [Citation; 20] = [
        Citation::FiberCriterion,
        Citation::TwoNormalGenerationBound,
        Citation::TwoNormalFamilies,
        Citation::PinchedVeroneseQuadratic,
        Citation::GroupGenerationBound,
        Citation::SurfaceGcdCriterion,
        Citation::ThreefoldParity,
        Citation::SurfaceSupportTwoKoszul,
        Citation::NonCyclicSurfaceKoszul,
        Citation::EqualWeightsGQuadratic,
        Citation::GroupVeroneseGQuadratic,
        Citation::RcOrderQuadraticGb,
        Citation::LiftPreservesGb,
        Citation::BlockGroupsGQuadratic,
        Citation::LargeExponentKoszul,
        Citation::CubeComplementKoszul,
        Citation::PinchedSurfaceKoszul,
        Citation::FullVeroneseGQuadratic,
        Citation::GbDominatesGenerators,
        Citation::ThreefoldRevLexExample,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Citation::FiberCriterion => "fiber-criterion",
            Citation::TwoNormalGenerationBound => "two-normal-generation-bound",
            Citation::TwoNormalFamilies => "two-normal-families",
            Citation::PinchedVeroneseQuadratic => "pinched-veronese-quadratic",
            Citation::GroupGenerationBound => "group-generation-bound",
            Citation::SurfaceGcdCriterion => "surface-gcd-criterion",
            Citation::ThreefoldParity => "threefold-parity",
            Citation::SurfaceSupportTwoKoszul => "surface-support-two-koszul",
            Citation::NonCyclicSurfaceKoszul => "non-cyclic-surface-koszul",
            Citation::EqualWeightsGQuadratic => "equal-weights-g-quadratic",
            Citation::GroupVeroneseGQuadratic => "group-veronese-g-quadratic",
            Citation::RcOrderQuadraticGb => "rc-order-quadratic-gb",
            Citation::LiftPreservesGb => "lift-preserves-gb",
            Citation::BlockGroupsGQuadratic => "block-groups-g-quadratic",
            Citation::LargeExponentKoszul => "large-exponent-koszul",
            Citation::CubeComplementKoszul => "cube-complement-koszul",
            Citation::PinchedSurfaceKoszul => "pinched-surface-koszul",
            Citation::FullVeroneseGQuadratic => "full-veronese-g-quadratic",
            Citation::GbDominatesGenerators => "gb-dominates-generators",
            Citation::ThreefoldRevLexExample => "threefold-revlex-example",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}
