use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u32; 16]>;

/// A power product `x_0^e_0 * ... * x_{n-1}^e_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The monomial `x_var^power`.
    pub fn var(nvars: usize, var: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Monomial quotient `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Re-index into a ring with `nvars` variables: variable `i` goes to `map[i]`.
    pub(crate) fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                out.exps[map[i]] += e;
            }
        }
        out
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Exponents {
        &mut self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 3, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.colon(&b).exponents(), &[1, 0, 0]);
        assert!(Monomial::from_exponents(&[1, 0, 0]).divides(&a));
        assert!(
            Monomial::from_exponents(&[2, 0, 0]).is_coprime(&Monomial::from_exponents(&[0, 1, 4]))
        );
    }
}
