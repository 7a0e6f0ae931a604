//! Dense exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Widest variable set supported: `f = 6` needs 21 variables.
pub const MAX_VARS: usize = 24;

/// A monomial over a fixed variable set of `nvars` variables, the first
/// `nx` of which are the x-block (bidegree `(1, 0)`), the rest the t-block.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    nvars: u8,
    nx: u8,
    deg: u16,
    deg_x: u16,
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && self.nvars == other.nvars
    }
}
impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
        self.nvars.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..self.nvars as usize])
    }
}

impl Monomial {
    pub fn one(nvars: usize, nx: usize) -> Self {
        assert!(nvars <= MAX_VARS && nx <= nvars);
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, nx: nx as u8, deg: 0, deg_x: 0 }
    }

    pub fn from_exponents(exps: &[u32], nx: usize) -> Self {
        let mut m = Monomial::one(exps.len(), nx);
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent {e} out of range");
            m.exps[i] = e as u8;
        }
        m.recompute();
        m
    }

    pub fn variable(index: usize, nvars: usize, nx: usize) -> Self {
        let mut m = Monomial::one(nvars, nx);
        m.exps[index] = 1;
        m.recompute();
        m
    }

    fn recompute(&mut self) {
        let n = self.nvars as usize;
        let nx = self.nx as usize;
        self.deg_x = self.exps[..nx].iter().map(|&e| e as u16).sum();
        self.deg = self.deg_x + self.exps[nx..n].iter().map(|&e| e as u16).sum::<u16>();
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn nx(&self) -> usize {
        self.nx as usize
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    /// `(x-degree, t-degree)`.
    #[inline]
    pub fn bidegree(&self) -> (u32, u32) {
        (self.deg_x as u32, (self.deg - self.deg_x) as u32)
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.deg = self.deg + other.deg;
        out.deg_x = self.deg_x + other.deg_x;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] = other.exps[i] - self.exps[i];
        }
        out.deg = other.deg - self.deg;
        out.deg_x = other.deg_x - self.deg_x;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.recompute();
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
        }
        out.recompute();
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set iff variable `i` occurs; a cheap divisibility pre-filter.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.nvars as usize {
            if self.exps[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut out = *self;
        out.exps[i] = u8::try_from(e).expect("exponent overflow");
        out.recompute();
        out
    }

    pub fn check_compatible(&self, other: &Monomial) -> Result<()> {
        if self.nvars != other.nvars || self.nx != other.nx {
            return Err(Error::MismatchedVariables(self.nvars as usize, other.nvars as usize));
        }
        Ok(())
    }
}

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Block order: grevlex on the x-block, ties broken by grevlex on the t-block.
    /// Any monomial with larger x-part wins, so the x-variables are eliminated first.
    ElimXFirst,
}

#[inline]
fn revlex_tail(a: &[u8], b: &[u8]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares `a` and `b`, checking they share a variable set.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_compatible(b)?;
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_shifted(a, (0, 0), b, (0, 0))
    }

    /// Compares `a` and `b` after adding the bidegree shifts `sa`, `sb` to their
    /// degrees. This is how module orders honour the twists of the components.
    #[inline]
    pub fn cmp_shifted(&self, a: &Monomial, sa: (i32, i32), b: &Monomial, sb: (i32, i32)) -> Ordering {
        let n = a.nvars as usize;
        match self {
            MonomialOrder::GrevLex => {
                let da = a.deg as i32 + sa.0 + sa.1;
                let db = b.deg as i32 + sb.0 + sb.1;
                da.cmp(&db).then_with(|| revlex_tail(&a.exps[..n], &b.exps[..n]))
            }
            MonomialOrder::Lex => {
                for i in 0..n {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::ElimXFirst => {
                let nx = a.nx as usize;
                let dxa = a.deg_x as i32 + sa.0;
                let dxb = b.deg_x as i32 + sb.0;
                dxa.cmp(&dxb)
                    .then_with(|| revlex_tail(&a.exps[..nx], &b.exps[..nx]))
                    .then_with(|| {
                        let dta = (a.deg - a.deg_x) as i32 + sa.1;
                        let dtb = (b.deg - b.deg_x) as i32 + sb.1;
                        dta.cmp(&dtb)
                    })
                    .then_with(|| revlex_tail(&a.exps[nx..n], &b.exps[nx..n]))
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e, e.len())
    }

    #[test]
    fn grevlex_tie_break_on_last_variable() {
        // x12^2 versus x12*x13
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn mismatched_sets_are_rejected() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(MonomialOrder::GrevLex.try_cmp(&a, &b).is_err());
    }

    #[test]
    fn bidegree_split() {
        let mono = Monomial::from_exponents(&[1, 2, 0, 3], 2);
        assert_eq!(mono.bidegree(), (3, 3));
        assert_eq!(mono.degree(), 6);
        let q = Monomial::from_exponents(&[1, 0, 0, 1], 2);
        assert!(q.divides(&mono));
        assert_eq!(q.quotient_of(&mono).bidegree(), (2, 2));
    }
}
