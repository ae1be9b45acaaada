//! Term orders on the presentation ring `S`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    /// Graded reverse lexicographic; identical to [`OrderKind::DegRevLex`]
    /// since ungraded reverse lex is not a well-order.
    RevLex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 4] = [
        OrderKind::Lex,
        OrderKind::RevLex,
        OrderKind::DegLex,
        OrderKind::DegRevLex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::RevLex => "revlex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    fn parse(s: &str) -> Option<OrderKind> {
        OrderKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// A multiplicative total order on `S`-monomials with `1` smallest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// A kind over a variable ranking; `vars[0]` is the greatest variable.
    Ranked { kind: OrderKind, vars: Vec<usize> },
    /// Compare images under `phi` with the base order, then break ties by
    /// graded reverse lex with the ranking `tie_vars` (greatest first).
    Lifted {
        base: Box<TermOrder>,
        phi: Vec<usize>,
        base_len: usize,
        tie_vars: Vec<usize>,
        sizes: Vec<usize>,
    },
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn lex(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    for &v in vars {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex_tail(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    for &v in vars.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

impl TermOrder {
    pub fn ranked(kind: OrderKind, vars: Vec<usize>) -> Result<TermOrder> {
        if !is_permutation(&vars) {
            return domain("variable ranking must be a permutation of 0..mu-1");
        }
        Ok(TermOrder::Ranked { kind, vars })
    }

    /// `w_0 > w_1 > ... > w_{mu-1}`.
    pub fn natural(kind: OrderKind, mu: usize) -> TermOrder {
        TermOrder::Ranked {
            kind,
            vars: (0..mu).collect(),
        }
    }

    pub(crate) fn lifted(
        base: TermOrder,
        phi: Vec<usize>,
        tie_vars: Vec<usize>,
        sizes: Vec<usize>,
    ) -> Result<TermOrder> {
        if phi.len() != tie_vars.len() || !is_permutation(&tie_vars) {
            return domain("lifted ranking must be a permutation of the lifted variables");
        }
        let base_len = base.nvars();
        if phi.iter().any(|&p| p >= base_len) {
            return domain("projection index out of range");
        }
        Ok(TermOrder::Lifted {
            base: Box::new(base),
            phi,
            base_len,
            tie_vars,
            sizes,
        })
    }

    pub fn nvars(&self) -> usize {
        match self {
            TermOrder::Ranked { vars, .. } => vars.len(),
            TermOrder::Lifted { phi, .. } => phi.len(),
        }
    }

    pub fn kind(&self) -> Option<OrderKind> {
        match self {
            TermOrder::Ranked { kind, .. } => Some(*kind),
            TermOrder::Lifted { .. } => None,
        }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Ranked { kind, vars } => match kind {
                OrderKind::Lex => lex(a, b, vars),
                OrderKind::DegLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b, vars)),
                OrderKind::RevLex | OrderKind::DegRevLex => degree(a)
                    .cmp(&degree(b))
                    .then_with(|| revlex_tail(a, b, vars)),
            },
            TermOrder::Lifted {
                base,
                phi,
                base_len,
                tie_vars,
                ..
            } => {
                let project = |x: &[u32]| {
                    let mut out = vec![0u32; *base_len];
                    for (j, &e) in x.iter().enumerate() {
                        out[phi[j]] += e;
                    }
                    out
                };
                base.compare(&project(a), &project(b))
                    .then_with(|| degree(a).cmp(&degree(b)))
                    .then_with(|| revlex_tail(a, b, tie_vars))
            }
        }
    }

    /// Variables from greatest to smallest.
    pub fn variable_ranking(&self) -> Vec<usize> {
        match self {
            TermOrder::Ranked { vars, .. } => vars.clone(),
            TermOrder::Lifted { .. } => {
                let mu = self.nvars();
                let unit = |i: usize| {
                    let mut v = vec![0u32; mu];
                    v[i] = 1;
                    v
                };
                let mut vars: Vec<usize> = (0..mu).collect();
                vars.sort_by(|&i, &j| self.compare(&unit(j), &unit(i)));
                vars
            }
        }
    }

    /// The textual form accepted by [`OrderSpec::parse`].
    pub fn spec_string(&self) -> String {
        match self {
            TermOrder::Ranked { kind, vars } => {
                let names: Vec<String> = vars.iter().map(|v| format!("w{v}")).collect();
                format!("{}: {}", kind.name(), names.join(" > "))
            }
            TermOrder::Lifted { base, sizes, .. } => {
                let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                format!("lift({}; sizes={})", base.spec_string(), s.join(","))
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// Parsed, not yet resolved, term-order description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    /// An empty variable list means the natural ranking.
    Ranked {
        kind: OrderKind,
        vars: Vec<usize>,
    },
    Rc {
        d: u32,
        k: u32,
        t: u32,
    },
    Lift {
        base: Box<OrderSpec>,
        sizes: Vec<usize>,
    },
}

fn parse_err<T>(text: &str, at: usize, message: &str) -> Result<T> {
    let token: String = text[at.min(text.len())..].chars().take(12).collect();
    Err(Error::Parse {
        position: at,
        token,
        message: message.into(),
    })
}

impl OrderSpec {
    pub fn parse(text: &str) -> Result<OrderSpec> {
        Self::parse_at(text, 0)
    }

    fn parse_at(full: &str, offset: usize) -> Result<OrderSpec> {
        let text = &full[offset..];
        let lead = text.len() - text.trim_start().len();
        let body = text.trim();
        let at = offset + lead;
        if let Some(inner) = body.strip_prefix("rc(").and_then(|r| r.strip_suffix(')')) {
            let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
            let parsed: std::result::Result<Vec<u32>, _> =
                nums.iter().map(|s| s.parse::<u32>()).collect();
            return match parsed.ok().filter(|v| v.len() == 3) {
                Some(v) => Ok(OrderSpec::Rc {
                    d: v[0],
                    k: v[1],
                    t: v[2],
                }),
                None => parse_err(full, at + 3, "rc expects three positive integers rc(d,k,t)"),
            };
        }
        if let Some(inner) = body.strip_prefix("lift(").and_then(|r| r.strip_suffix(')')) {
            let inner_at = at + 5;
            let semi = match inner.rfind(';') {
                Some(p) => p,
                None => {
                    return parse_err(full, inner_at, "lift expects `lift(<order>; sizes=...)`")
                }
            };
            let base = OrderSpec::parse_at(&full[..inner_at + semi], inner_at)?;
            let rest = inner[semi + 1..].trim();
            let list = match rest
                .strip_prefix("sizes")
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
            {
                Some(l) => l,
                None => return parse_err(full, inner_at + semi + 1, "expected `sizes=`"),
            };
            let sizes: std::result::Result<Vec<usize>, _> =
                list.split(',').map(|s| s.trim().parse::<usize>()).collect();
            return match sizes {
                Ok(s) if !s.is_empty() && s.iter().all(|&x| x > 0) => Ok(OrderSpec::Lift {
                    base: Box::new(base),
                    sizes: s,
                }),
                _ => parse_err(full, inner_at + semi + 1, "sizes must be positive integers"),
            };
        }
        let (name, rest) = match body.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (body, None),
        };
        let kind = match OrderKind::parse(&name.to_ascii_lowercase()) {
            Some(k) => k,
            None => {
                return parse_err(
                    full,
                    at,
                    "unknown order kind (lex, revlex, deglex, degrevlex, rc, lift)",
                )
            }
        };
        let mut vars = Vec::new();
        if let Some(r) = rest {
            for tok in r.split('>') {
                let t = tok.trim();
                let digits = t.strip_prefix('w').unwrap_or(t);
                match digits.parse::<usize>() {
                    Ok(v) => vars.push(v),
                    Err(_) => {
                        let pos = full.find(t).unwrap_or(at);
                        return parse_err(full, pos, "expected a variable like w3");
                    }
                }
            }
            if !is_permutation(&vars) {
                return parse_err(
                    full,
                    at,
                    "variable list must name each variable exactly once",
                );
            }
        }
        Ok(OrderSpec::Ranked { kind, vars })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!(
            OrderSpec::parse("degrevlex: w2 > w0 > w1").unwrap(),
            OrderSpec::Ranked {
                kind: OrderKind::DegRevLex,
                vars: vec![2, 0, 1]
            }
        );
        assert_eq!(
            OrderSpec::parse(" rc(6, 3, 1) ").unwrap(),
            OrderSpec::Rc { d: 6, k: 3, t: 1 }
        );
        assert_eq!(
            OrderSpec::parse("lift(rc(6,3,1); sizes=1,1,2)").unwrap(),
            OrderSpec::Lift {
                base: Box::new(OrderSpec::Rc { d: 6, k: 3, t: 1 }),
                sizes: vec![1, 1, 2]
            }
        );
        assert_eq!(
            OrderSpec::parse("lex").unwrap(),
            OrderSpec::Ranked {
                kind: OrderKind::Lex,
                vars: vec![]
            }
        );
        assert!(OrderSpec::parse("lex: w0 > w0").is_err());
        assert!(OrderSpec::parse("banana").is_err());
        assert!(OrderSpec::parse("lift(lex; size=1)").is_err());
    }

    #[test]
    fn spec_string_roundtrip() {
        let o = TermOrder::ranked(OrderKind::DegLex, vec![1, 2, 0]).unwrap();
        assert_eq!(o.spec_string(), "deglex: w1 > w2 > w0");
        assert_eq!(
            OrderSpec::parse(&o.spec_string()).unwrap(),
            OrderSpec::Ranked {
                kind: OrderKind::DegLex,
                vars: vec![1, 2, 0]
            }
        );
    }

    #[test]
    fn revlex_examples() {
        let o = TermOrder::natural(OrderKind::DegRevLex, 3);
        // w1^2 > w0*w2 in degrevlex with w0 > w1 > w2
        assert_eq!(o.compare(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        let l = TermOrder::natural(OrderKind::Lex, 3);
        assert_eq!(l.compare(&[0, 2, 0], &[1, 0, 1]), Ordering::Less);
    }

    fn any_order(mu: usize) -> impl Strategy<Value = TermOrder> {
        (0..4usize, Just((0..mu).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(k, vars)| TermOrder::ranked(OrderKind::ALL[k], vars).unwrap())
    }

    fn mono(mu: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..4, mu)
    }

    proptest! {
        #[test]
        fn orders_are_term_orders(o in any_order(5), u in mono(5), v in mono(5), w in mono(5)) {
            let c = o.compare(&u, &v);
            prop_assert_eq!(c, o.compare(&v, &u).reverse());
            prop_assert_eq!(c == Ordering::Equal, u == v);
            let uw: Vec<u32> = u.iter().zip(&w).map(|(a, b)| a + b).collect();
            let vw: Vec<u32> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
            prop_assert_eq!(o.compare(&uw, &vw), c);
            if u.iter().any(|&x| x > 0) {
                prop_assert_eq!(o.compare(&u, &[0; 5]), Ordering::Greater);
            }
        }
    }
}
