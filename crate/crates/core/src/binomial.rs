//! Binomials `w^plus - w^minus` of the presentation ring `S = K[w_0..w_{mu-1}]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::monomial::{Monomial, MonomialSet};

/// The image `rho(w^a) = prod m_i^{a_i}` of an `S`-monomial.
pub fn rho(omega: &MonomialSet, a: &[u32]) -> Result<Monomial> {
    if a.len() != omega.len() {
        return Err(Error::DimensionMismatch {
            expected: omega.len(),
            got: a.len(),
        });
    }
    let mut exps = vec![0u64; omega.nvars()];
    for (i, &e) in a.iter().enumerate() {
        if e == 0 {
            continue;
        }
        for (acc, &x) in exps.iter_mut().zip(omega.get(i).exponents()) {
            *acc += x as u64 * e as u64;
        }
    }
    let exps = exps
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Error::Overflow("image exponent exceeds u32".into())))
        .collect::<Result<Vec<u32>>>()?;
    Monomial::try_new(exps)
}

/// A pair of `S`-exponent vectors with the same `rho`-image and different
/// values. Orientation is not fixed here; see the Groebner engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    plus: Vec<u32>,
    minus: Vec<u32>,
}

impl Binomial {
    /// Validates length, distinctness and balance against `omega`.
    pub fn new(omega: &MonomialSet, plus: Vec<u32>, minus: Vec<u32>) -> Result<Self> {
        if plus == minus {
            return domain("binomial sides must differ");
        }
        let lhs = rho(omega, &plus)?;
        let rhs = rho(omega, &minus)?;
        if lhs != rhs {
            return domain(format!(
                "unbalanced binomial: images {lhs} and {rhs} differ"
            ));
        }
        Ok(Binomial { plus, minus })
    }

    pub(crate) fn new_unchecked(plus: Vec<u32>, minus: Vec<u32>) -> Self {
        debug_assert_eq!(plus.len(), minus.len());
        Binomial { plus, minus }
    }

    /// Builds the binomial `prod w_{p_i} - prod w_{q_i}` from index multisets.
    pub fn from_indices(omega: &MonomialSet, plus: &[usize], minus: &[usize]) -> Result<Self> {
        let mu = omega.len();
        let to_exps = |idx: &[usize]| -> Result<Vec<u32>> {
            let mut v = vec![0u32; mu];
            for &i in idx {
                if i >= mu {
                    return domain(format!("index {i} out of range for {mu} variables"));
                }
                v[i] += 1;
            }
            Ok(v)
        };
        Self::new(omega, to_exps(plus)?, to_exps(minus)?)
    }

    pub fn plus(&self) -> &[u32] {
        &self.plus
    }

    pub fn minus(&self) -> &[u32] {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// Total degree of the larger side.
    pub fn degree(&self) -> u32 {
        let p: u32 = self.plus.iter().sum();
        let m: u32 = self.minus.iter().sum();
        p.max(m)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.iter().sum::<u32>() == self.minus.iter().sum::<u32>()
    }

    /// No variable divides both sides.
    pub fn is_gcd_reduced(&self) -> bool {
        self.plus
            .iter()
            .zip(&self.minus)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Divides both sides by their gcd.
    pub fn gcd_reduced(&self) -> Binomial {
        let (plus, minus) = self
            .plus
            .iter()
            .zip(&self.minus)
            .map(|(&a, &b)| {
                let g = a.min(b);
                (a - g, b - g)
            })
            .unzip();
        Binomial { plus, minus }
    }

    pub fn swapped(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Indices of one side as a sorted multiset.
    pub fn side_indices(side: &[u32]) -> Vec<usize> {
        side.iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }
}

pub(crate) fn format_s_monomial(a: &[u32]) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("w{i}")
            } else {
                format!("w{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            format_s_monomial(&self.plus),
            format_s_monomial(&self.minus)
        )
    }
}
