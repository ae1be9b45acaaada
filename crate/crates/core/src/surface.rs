//! Quadraticity and Koszulness of surface projections `X_{2,d}^G`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::citation::Citation;
use crate::error::{domain, Error, Result};
use crate::group::DiagonalGroup;
use crate::monomial::Monomial;

/// Weights `(0, alpha1, alpha2)` with `alpha1 <= alpha2 < d` equivalent to the
/// input group up to a permutation of the variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceNormalForm {
    pub d: u32,
    pub alpha1: u32,
    pub alpha2: u32,
    /// Output variable `p` is input variable `permutation[p]`.
    pub permutation: [usize; 3],
    /// All three weights coincide, so the group acts trivially on `R_{td}`.
    pub degenerate: bool,
    /// The shift by `-alpha2` applied when the sorted weights were `(0,0,a)`.
    pub reshifted: bool,
}

impl SurfaceNormalForm {
    pub fn group(&self) -> DiagonalGroup {
        DiagonalGroup::cyclic_nominal(self.d, &[0, self.alpha1 as i64, self.alpha2 as i64])
            .expect("normal form weights are valid")
    }

    /// Rewrites a monomial of the input ring into the variables of the
    /// normal-form group.
    pub fn map_monomial(&self, m: &Monomial) -> Monomial {
        let e = m.exponents();
        Monomial::new(self.permutation.iter().map(|&j| e[j]).collect())
    }
}

fn surface_weights(g: &DiagonalGroup) -> Result<&[u32]> {
    if g.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: g.nvars(),
        });
    }
    g.cyclic_weights()
}

pub fn surface_normal_form(g: &DiagonalGroup) -> Result<SurfaceNormalForm> {
    let w = surface_weights(g)?;
    let d = g.order();
    let shifted: Vec<u32> = w.iter().map(|&x| (x + d - w[0]) % d).collect();
    let mut perm = [0usize, 1, 2];
    perm.sort_by_key(|&j| (shifted[j], j));
    let mut s = [shifted[perm[0]], shifted[perm[1]], shifted[perm[2]]];
    let mut reshifted = false;
    if s[1] == 0 && s[2] != 0 {
        let a = s[2];
        let t = [(s[0] + d - a) % d, (s[1] + d - a) % d, 0];
        let mut order = [0usize, 1, 2];
        order.sort_by_key(|&p| (t[p], p));
        perm = [perm[order[0]], perm[order[1]], perm[order[2]]];
        s = [t[order[0]], t[order[1]], t[order[2]]];
        reshifted = true;
    }
    Ok(SurfaceNormalForm {
        d,
        alpha1: s[1],
        alpha2: s[2],
        permutation: perm,
        degenerate: s[1] == 0 && s[2] == 0,
        reshifted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCriterionReport {
    pub d: u32,
    pub alpha1: u32,
    pub alpha2: u32,
    pub alpha1_prime: u32,
    pub d_prime: u32,
    pub lambda: u32,
    pub mu: i64,
    pub gcd_product: u64,
    pub quadratic: bool,
}

/// The `lambda`-decomposition `alpha2 = lambda * alpha1' + mu * d'` with
/// `0 < lambda <= d'`, and the gcd criterion.
pub fn surface_lambda_decomposition(
    d: u32,
    alpha1: u32,
    alpha2: u32,
) -> Result<SurfaceCriterionReport> {
    if !(0 < alpha1 && alpha1 < alpha2 && alpha2 < d) {
        return domain(format!(
            "need 0 < alpha1 < alpha2 < d, got ({d}, {alpha1}, {alpha2})"
        ));
    }
    let g = alpha1.gcd(&d);
    let a1p = alpha1 / g;
    let dp = d / g;
    let inv = {
        let e = (a1p as i64).extended_gcd(&(dp as i64));
        e.x.rem_euclid(dp as i64)
    };
    let mut lambda = ((alpha2 as i64 % dp as i64) * inv).rem_euclid(dp as i64);
    if lambda == 0 {
        lambda = dp as i64;
    }
    let mu = (alpha2 as i64 - lambda * a1p as i64) / dp as i64;
    debug_assert_eq!(alpha2 as i64, lambda * a1p as i64 + mu * dp as i64);
    let g2 = (lambda as u64).gcd(&(dp as u64));
    let g3 = ((lambda - g as i64).unsigned_abs()).gcd(&(dp as u64));
    let gcd_product = g as u64 * g2 * g3;
    Ok(SurfaceCriterionReport {
        d,
        alpha1,
        alpha2,
        alpha1_prime: a1p,
        d_prime: dp,
        lambda: lambda as u32,
        mu,
        gcd_product,
        quadratic: gcd_product > 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceRule {
    /// Two weights coincide after normal form.
    EqualWeights,
    /// `0 < alpha1 < alpha2`: strictness of the gcd inequality.
    GcdCriterion,
    /// The presented group is not cyclic.
    NonCyclic,
    /// A direct-sum presentation of smaller effective order, decided by the
    /// support-two test on `B_1`.
    SupportTwoFallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceVerdict {
    pub quadratic: bool,
    pub rule: SurfaceRule,
    pub normal_form: Option<SurfaceNormalForm>,
    pub report: Option<SurfaceCriterionReport>,
    pub notes: Vec<String>,
}

impl SurfaceVerdict {
    pub fn citation(&self) -> Citation {
        match self.rule {
            SurfaceRule::EqualWeights => Citation::EqualWeightsGQuadratic,
            SurfaceRule::GcdCriterion => Citation::SurfaceGcdCriterion,
            SurfaceRule::NonCyclic => Citation::NonCyclicSurfaceKoszul,
            SurfaceRule::SupportTwoFallback => Citation::SurfaceSupportTwoKoszul,
        }
    }
}

pub fn surface_quadraticity(g: &DiagonalGroup) -> Result<SurfaceVerdict> {
    if g.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: g.nvars(),
        });
    }
    let mut notes: Vec<String> = g.warnings().to_vec();
    let cyclic = if g.is_cyclic_presentation() {
        g.clone()
    } else if let Some(c) = g.as_cyclic() {
        notes.push(format!("direct sum {g} rewritten as the cyclic group {c}"));
        c
    } else if g.is_noncyclic() {
        return Ok(SurfaceVerdict {
            quadratic: true,
            rule: SurfaceRule::NonCyclic,
            normal_form: None,
            report: None,
            notes,
        });
    } else {
        notes.push(format!(
            "{g}: presented order differs from the generated group; using the support-two test"
        ));
        return Ok(SurfaceVerdict {
            quadratic: support_two_witness(g)?.is_some(),
            rule: SurfaceRule::SupportTwoFallback,
            normal_form: None,
            report: None,
            notes,
        });
    };
    let nf = surface_normal_form(&cyclic)?;
    if nf.degenerate {
        notes.push(
            "all weights coincide: the group acts trivially on monomials of degree td".into(),
        );
    }
    if nf.reshifted {
        notes.push("weights (0,0,a) reshifted by -a to (0,d-a,d-a)".into());
    }
    if nf.alpha1 == nf.alpha2 {
        return Ok(SurfaceVerdict {
            quadratic: true,
            rule: SurfaceRule::EqualWeights,
            normal_form: Some(nf),
            report: None,
            notes,
        });
    }
    let report = surface_lambda_decomposition(nf.d, nf.alpha1, nf.alpha2)?;
    Ok(SurfaceVerdict {
        quadratic: report.quadratic,
        rule: SurfaceRule::GcdCriterion,
        normal_form: Some(nf),
        report: Some(report),
        notes,
    })
}

/// A member of `B_1` supported on exactly two variables, if any.
pub fn support_two_witness(g: &DiagonalGroup) -> Result<Option<Monomial>> {
    let b1 = g.invariants_of_degree(1)?;
    Ok(b1.iter().find(|m| m.support_size() == 2).cloned())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulSurfaceVerdict {
    pub koszul: bool,
    pub witness: Option<Monomial>,
    pub citation: Citation,
}

pub fn koszul_verdict_surface(g: &DiagonalGroup) -> Result<KoszulSurfaceVerdict> {
    if g.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: g.nvars(),
        });
    }
    if g.is_noncyclic() {
        return Ok(KoszulSurfaceVerdict {
            koszul: true,
            witness: support_two_witness(g)?,
            citation: Citation::NonCyclicSurfaceKoszul,
        });
    }
    let witness = support_two_witness(g)?;
    Ok(KoszulSurfaceVerdict {
        koszul: witness.is_some(),
        witness,
        citation: Citation::SurfaceSupportTwoKoszul,
    })
}
