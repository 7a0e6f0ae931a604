use std::cmp::Ordering;
use std::collections::HashMap;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::{binomial, Variable};
use crate::error::{Error, Result};

/// A polynomial: `(monomial, coefficient)` pairs, strictly decreasing in the
/// order of the ring that built it, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

/// Result of [`PolyRing::bidegree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bidegree {
    Zero,
    Pure(u32, u32),
    Inhomogeneous,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// True when all terms share one total degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }
}

/// The polynomial ring `K[x_(i,j), t_i]` for a fixed matrix size `f`,
/// coefficient field and monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    f: usize,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    /// Grevlex ring for the given matrix size. Needs `1 <= f <= 6`.
    pub fn new(field: F, f: usize) -> Result<Self> {
        if f == 0 || binomial(f, 2) + f > MAX_VARS {
            return Err(Error::InvalidParameter(format!("matrix size {f} out of range 1..=6")));
        }
        Ok(PolyRing { field, f, order: MonomialOrder::GrevLex })
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field.clone(), f: self.f, order }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        binomial(self.f, 2) + self.f
    }

    /// Number of x-variables, `C(f, 2)`.
    pub fn nx(&self) -> usize {
        binomial(self.f, 2)
    }

    pub fn var_index(&self, v: Variable) -> Result<usize> {
        let f = self.f;
        match v {
            Variable::X(i, j) if 1 <= i && i < j && j <= f => {
                let before: usize = (1..i).map(|a| f - a).sum();
                Ok(before + (j - i - 1))
            }
            Variable::T(i) if 1 <= i && i <= f => Ok(self.nx() + i - 1),
            _ => Err(Error::InvalidParameter(format!("variable {v} not in the ring for f = {f}"))),
        }
    }

    pub fn variable_at(&self, index: usize) -> Variable {
        let f = self.f;
        if index >= self.nx() {
            return Variable::T(index - self.nx() + 1);
        }
        let mut k = index;
        for i in 1..f {
            if k < f - i {
                return Variable::X(i, i + 1 + k);
            }
            k -= f - i;
        }
        unreachable!("index {index} out of range")
    }

    pub fn variables(&self) -> Vec<Variable> {
        (0..self.nvars()).map(|i| self.variable_at(i)).collect()
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars(), self.nx())
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.nvars());
        Monomial::from_exponents(exps, self.nx())
    }

    pub fn var_monomial(&self, v: Variable) -> Result<Monomial> {
        Ok(Monomial::variable(self.var_index(v)?, self.nvars(), self.nx()))
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, self.one_monomial())
    }

    pub fn from_i64(&self, c: i64) -> Polynomial<F> {
        self.constant(self.field.from_i64(c))
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, v: Variable) -> Result<Polynomial<F>> {
        Ok(self.term(self.field.one(), self.var_monomial(v)?))
    }

    /// `x_(i,j)`; panics when the pair is out of range.
    pub fn x(&self, i: usize, j: usize) -> Polynomial<F> {
        self.var(Variable::X(i, j)).expect("x index in range")
    }

    /// `t_i`; panics when out of range.
    pub fn t(&self, i: usize) -> Polynomial<F> {
        self.var(Variable::T(i)).expect("t index in range")
    }

    /// The entry of the generic alternating matrix in row `i`, column `j` (1-based).
    pub fn alternating_entry(&self, i: usize, j: usize) -> Polynomial<F> {
        match i.cmp(&j) {
            Ordering::Less => self.x(i, j),
            Ordering::Equal => self.zero(),
            Ordering::Greater => self.neg(&self.x(j, i)),
        }
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => {
                    last.1 = self.field.add(&last.1, &c);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if self.field.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial built by a ring with the same variables but another order.
    pub fn import(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Polynomial { terms }
    }

    fn merge(&self, a: &Polynomial<F>, b: &Polynomial<F>, negate_b: bool) -> Polynomial<F> {
        let fld = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match self.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if negate_b { fld.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { fld.sub(ca, cb) } else { fld.add(ca, cb) };
                    if !fld.is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(
            b.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if negate_b { fld.neg(c) } else { c.clone() })),
        );
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(a, b, false)
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(a, b, true)
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial { terms: a.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &F::Elem, a: &Polynomial<F>) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: a.terms.iter().map(|(m, d)| (*m, self.field.mul(c, d))).collect() }
    }

    /// `c * m * a`; the order is multiplicative so sortedness is preserved.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial, a: &Polynomial<F>) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(n, d)| (n.mul(m), self.field.mul(c, d))).collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        if a.len() == 1 {
            return self.mul_term(&a.terms[0].1, &a.terms[0].0, b);
        }
        if b.len() == 1 {
            return self.mul_term(&b.terms[0].1, &b.terms[0].0, a);
        }
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                terms.push((ma.mul(mb), self.field.mul(ca, cb)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, a: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Sum of a sequence of polynomials.
    pub fn sum<'a, I: IntoIterator<Item = &'a Polynomial<F>>>(&self, items: I) -> Polynomial<F> {
        let mut terms = Vec::new();
        for p in items {
            terms.extend(p.terms.iter().cloned());
        }
        self.from_terms(terms)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, a: &Polynomial<F>) -> Polynomial<F> {
        match a.lead_coeff() {
            None => Polynomial::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => self.scale(&self.field.inv(c), a),
        }
    }

    /// Bidegree if every term shares it.
    pub fn bidegree(&self, a: &Polynomial<F>) -> Bidegree {
        let Some((m, _)) = a.terms.first() else {
            return Bidegree::Zero;
        };
        let b = m.bidegree();
        if a.terms.iter().all(|t| t.0.bidegree() == b) {
            Bidegree::Pure(b.0, b.1)
        } else {
            Bidegree::Inhomogeneous
        }
    }

    /// Evaluates `a` at a point given per variable.
    pub fn specialize(
        &self,
        a: &Polynomial<F>,
        assignment: &HashMap<Variable, F::Elem>,
    ) -> Result<F::Elem> {
        let fld = &self.field;
        let mut values = Vec::with_capacity(self.nvars());
        for i in 0..self.nvars() {
            values.push(assignment.get(&self.variable_at(i)).cloned());
        }
        let mut acc = fld.zero();
        for (m, c) in &a.terms {
            let mut t = c.clone();
            for (i, v) in values.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let v = v
                    .as_ref()
                    .ok_or_else(|| Error::MissingAssignment(self.variable_at(i).to_string()))?;
                for _ in 0..e {
                    t = fld.mul(&t, v);
                }
            }
            acc = fld.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Substitutes `value` for variable `v`, keeping the other variables.
    pub fn substitute(&self, a: &Polynomial<F>, v: Variable, value: &Polynomial<F>) -> Result<Polynomial<F>> {
        let idx = self.var_index(v)?;
        let mut acc = self.zero();
        for (m, c) in &a.terms {
            let e = m.exponent(idx);
            let rest = self.term(c.clone(), m.with_exponent(idx, 0));
            acc = self.add(&acc, &self.mul(&rest, &self.pow(value, e)));
        }
        Ok(acc)
    }

    /// A random polynomial with at most `nterms` terms of total degree at most `max_deg`.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R, max_deg: u32, nterms: usize) -> Polynomial<F> {
        let n = self.nvars();
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let d = rng.gen_range(0..=max_deg);
            let mut exps = vec![0u32; n];
            for _ in 0..d {
                exps[rng.gen_range(0..n)] += 1;
            }
            terms.push((self.monomial(&exps), self.field.random(rng)));
        }
        self.from_terms(terms)
    }

    /// A random bihomogeneous polynomial of the given bidegree.
    pub fn random_bihomogeneous<R: rand::Rng + ?Sized>(
        &self,
        rng: &mut R,
        bideg: (u32, u32),
        nterms: usize,
    ) -> Polynomial<F> {
        let (nx, n) = (self.nx(), self.nvars());
        let mut terms = Vec::with_capacity(nterms);
        for _ in 0..nterms {
            let mut exps = vec![0u32; n];
            for _ in 0..bideg.0 {
                exps[rng.gen_range(0..nx)] += 1;
            }
            for _ in 0..bideg.1 {
                exps[rng.gen_range(nx..n)] += 1;
            }
            terms.push((self.monomial(&exps), self.field.random(rng)));
        }
        self.from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn variable_indexing_round_trips() {
        let r = PolyRing::new(Rationals, 5).unwrap();
        assert_eq!(r.nvars(), 15);
        for i in 0..r.nvars() {
            assert_eq!(r.var_index(r.variable_at(i)).unwrap(), i);
        }
        assert_eq!(r.var_index(Variable::X(1, 2)).unwrap(), 0);
        assert_eq!(r.var_index(Variable::X(4, 5)).unwrap(), 9);
        assert_eq!(r.var_index(Variable::T(1)).unwrap(), 10);
        assert!(r.var_index(Variable::X(2, 2)).is_err());
        assert!(r.var_index(Variable::T(6)).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::new(Rationals, 2).unwrap();
        let (x, t) = (r.x(1, 2), r.t(1));
        let prod = r.mul(&r.add(&x, &t), &r.sub(&x, &t));
        let expected = r.sub(&r.mul(&x, &x), &r.mul(&t, &t));
        assert_eq!(prod, expected);
        assert!(r.mul(&prod, &r.zero()).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = PolyRing::new(PrimeField::new(2).unwrap(), 2).unwrap();
        let s = r.add(&r.x(1, 2), &r.t(1));
        let sq = r.mul(&s, &s);
        assert_eq!(sq, r.add(&r.mul(&r.x(1, 2), &r.x(1, 2)), &r.mul(&r.t(1), &r.t(1))));
    }

    #[test]
    fn bidegree_cases() {
        let r = PolyRing::new(Rationals, 4).unwrap();
        assert_eq!(r.bidegree(&r.add(&r.x(1, 2), &r.t(1))), Bidegree::Inhomogeneous);
        assert_eq!(r.bidegree(&r.mul(&r.x(1, 2), &r.t(3))), Bidegree::Pure(1, 1));
        assert_eq!(r.bidegree(&r.zero()), Bidegree::Zero);
    }

    #[test]
    fn specialize_all_ones() {
        let r = PolyRing::new(Rationals, 4).unwrap();
        let pf = r.add(
            &r.sub(&r.mul(&r.x(1, 2), &r.x(3, 4)), &r.mul(&r.x(1, 3), &r.x(2, 4))),
            &r.mul(&r.x(1, 4), &r.x(2, 3)),
        );
        let ones: HashMap<_, _> = r.variables().into_iter().map(|v| (v, r.field().one())).collect();
        assert_eq!(r.specialize(&pf, &ones).unwrap(), r.field().one());
        assert_eq!(r.specialize(&r.zero(), &ones).unwrap(), r.field().zero());
        let partial: HashMap<_, _> = [(Variable::X(1, 2), r.field().one())].into_iter().collect();
        assert!(r.specialize(&pf, &partial).is_err());
    }
}
