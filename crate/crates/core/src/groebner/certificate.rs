//! Theorem-backed G-quadraticity certificates for cyclic surface groups.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::citation::Citation;
use crate::error::{domain, Result};
use crate::group::DiagonalGroup;
use crate::surface::surface_normal_form;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum CertificateCase {
    /// Weights `(0, k, d-k)` with `d` even and `gcd(d, k) = 1`.
    EvenOrderCoprime { k: u32 },
    /// `gcd(d, a1, a2) = delta > 1`: the invariant ring is the `delta`-th
    /// Veronese subalgebra of the ring for the reduced group.
    VeroneseSubalgebra { delta: u32, reduced: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GQuadraticCertificate {
    pub group: String,
    pub case: CertificateCase,
    pub justification: String,
    pub citation: Citation,
}

pub fn veronese_subalgebra_certificate(g: &DiagonalGroup) -> Result<GQuadraticCertificate> {
    let nf = surface_normal_form(g)?;
    let (d, a1, a2) = (nf.d, nf.alpha1, nf.alpha2);
    let delta = d.gcd(&a1).gcd(&a2);
    if delta > 1 {
        let reduced = DiagonalGroup::cyclic_nominal(
            d / delta,
            &[0, (a1 / delta) as i64, (a2 / delta) as i64],
        )?;
        return Ok(GQuadraticCertificate {
            group: g.to_string(),
            case: CertificateCase::VeroneseSubalgebra {
                delta,
                reduced: reduced.to_string(),
            },
            justification: format!(
                "degree-{d} invariants of {g} are the degree-{d} invariants of {reduced}; \
                 its invariant ring has regularity at most 3, so the {delta}-th Veronese \
                 subalgebra has a quadratic Groebner basis"
            ),
            citation: Citation::GroupVeroneseGQuadratic,
        });
    }
    if d % 2 == 0 && a1 + a2 == d && a1.gcd(&d) == 1 {
        return Ok(GQuadraticCertificate {
            group: g.to_string(),
            case: CertificateCase::EvenOrderCoprime { k: a1 },
            justification: format!(
                "weights (0,{a1},{a2}) with d = {d} even and gcd(d,{a1}) = 1 give a ring isomorphic \
                 to the one of <M_{{{d};0,1,2}}>, which has a quadratic basis for the (r,c) order"
            ),
            citation: Citation::GroupVeroneseGQuadratic,
        });
    }
    domain(format!(
        "{g}: gcd(d, a1, a2) = 1 and the weights are not (0, k, d-k) with d even and gcd(d, k) = 1"
    ))
}
