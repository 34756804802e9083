use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Monomial orders used by the engine.
///
/// All variants are total orders compatible with multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x_0 > x_1 > ...`.
    #[default]
    Grevlex,
    /// Pure lexicographic, `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `block` variables: grevlex on the
    /// front block, ties broken by grevlex on the remaining variables.
    Elimination { block: usize },
    /// Total degree first, then the larger power of `var`, then grevlex.
    ///
    /// On polynomials homogenized with `var`, a Gröbner basis for this order
    /// dehomogenizes to a standard basis for the local degree order.
    DegreeThenVar { var: usize },
}

fn grevlex_range(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Grevlex => grevlex_range(ea, eb),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Elimination { block } => {
                let k = block.min(ea.len());
                grevlex_range(&ea[..k], &eb[..k]).then_with(|| grevlex_range(&ea[k..], &eb[k..]))
            }
            MonomialOrder::DegreeThenVar { var } => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| ea[var].cmp(&eb[var]))
                .then_with(|| grevlex_range(ea, eb)),
        }
    }

    /// Parse `grevlex`, `lex`, `elim:K`.
    pub fn parse(text: &str) -> Option<MonomialOrder> {
        match text {
            "grevlex" => Some(MonomialOrder::Grevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => {
                let k = text.strip_prefix("elim:")?.parse().ok()?;
                Some(MonomialOrder::Elimination { block: k })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz > yz > z^2 in degree 2
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(
                o.cmp(&w[0], &w[1]),
                Ordering::Greater,
                "{:?} vs {:?}",
                w[0],
                w[1]
            );
        }
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_prefers_front_block() {
        let o = MonomialOrder::Elimination { block: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn degree_then_var_prefers_homogenizer() {
        let o = MonomialOrder::DegreeThenVar { var: 2 };
        // t*y beats x^2 in degree 2
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[2, 0, 0])), Ordering::Greater);
    }
}
