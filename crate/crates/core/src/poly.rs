//! Sparse multivariate polynomials over Q with exact arithmetic.
//!
//! Terms are kept in a BTreeMap keyed by monomial, so a polynomial is always
//! in canonical form: no zero coefficients are stored and iteration follows
//! the fixed monomial order. Structural equality is mathematical equality.

use crate::monomial::Monomial;
use crate::vars::{Var, VarGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("exact division failed: divisor does not divide the dividend")]
    NotDivisible,
    #[error("gcd of a list whose entries are all zero")]
    AllZero,
}

/// Degree with a distinguished minus-infinity value for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Fin(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInf => None,
            Degree::Fin(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Fin(d) => write!(f, "{}", d),
        }
    }
}

/// Degrees with respect to the three variable groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiDegree {
    pub deg_su: Degree,
    pub deg_tv: Degree,
    pub deg_coords: Degree,
}

/// A sparse polynomial in Q[s,u,t,v,w,x,y,z].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        MultiPoly { terms }
    }

    pub fn int(n: i64) -> MultiPoly {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(rat(1), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(&c, &m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::ONE))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    fn add_term(&mut self, c: &Rational, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(*m, c.clone());
            }
        }
    }

    pub fn add_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(c, m);
        }
        out
    }

    pub fn sub_ref(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(&(-c.clone()), m);
        }
        out
    }

    pub fn neg_ref(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, -c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = MultiPoly::zero();
        for (ms, cs) in small.terms() {
            for (ml, cl) in large.terms() {
                out.add_term(&(cs * cl), &ms.mul(ml));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Exact division: returns r with `self = q * r`.
    pub fn div_exact(&self, q: &MultiPoly) -> Result<MultiPoly, ArithError> {
        if q.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let qm = *q.leading_monomial().unwrap();
        let qc = q.leading_coefficient().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some(rm) = rem.leading_monomial().copied() {
            let m = rm.checked_div(&qm).ok_or(ArithError::NotDivisible)?;
            let c = rem.leading_coefficient().unwrap() / &qc;
            // rem -= c*m*q, term by term
            for (tm, tc) in q.terms() {
                rem.add_term(&(-(&c) * tc), &tm.mul(&m));
            }
            quo.add_term(&c, &m);
        }
        Ok(quo)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_ok()
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, bindings: &[(Var, MultiPoly)]) -> MultiPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut bound: [Option<&MultiPoly>; 8] = [None; 8];
        for (v, p) in bindings {
            bound[v.index()] = Some(p);
        }
        // cache powers of each bound image
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]; 8];
        let mut power_of = |i: usize, e: u32, powers: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            let cache = &mut powers[i];
            while cache.len() <= e as usize {
                let next = cache.last().unwrap().mul_ref(bound[i].unwrap());
                cache.push(next);
            }
            cache[e as usize].clone()
        };
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let mut residual = [0u32; 8];
            let mut factor = MultiPoly::constant(c.clone());
            for i in 0..8 {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                if bound[i].is_some() {
                    factor = factor.mul_ref(&power_of(i, e, &mut powers));
                } else {
                    residual[i] = e;
                }
            }
            out = out.add_ref(&factor.mul_monomial(&Monomial(residual)));
        }
        out
    }

    /// Full rational evaluation. Every variable occurring in the polynomial
    /// must be bound.
    pub fn eval(&self, vals: &[(Var, Rational)]) -> Rational {
        let mut bound: [Option<&Rational>; 8] = [None; 8];
        for (v, r) in vals {
            bound[v.index()] = Some(r);
        }
        let mut acc = Rational::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for i in 0..8 {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let b = bound[i].expect("eval: unbound variable");
                for _ in 0..e {
                    t *= b;
                }
            }
            acc += t;
        }
        acc
    }

    /// Rename variables. `map` sends old variables to new ones; unmapped
    /// variables stay put. The map must be injective on the support.
    pub fn rename_vars(&self, map: &[(Var, Var)]) -> MultiPoly {
        let mut table: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
        for (from, to) in map {
            table[from.index()] = to.index();
        }
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let mut e = [0u32; 8];
            for i in 0..8 {
                e[table[i]] += m.0[i];
            }
            out.add_term(c, &Monomial(e));
        }
        out
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        let i = v.index();
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[i] -= 1;
            out.add_term(&(c * rat(e as i64)), &Monomial(exps));
        }
        out
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .map_or(Degree::NegInf, Degree::Fin)
    }

    pub fn degree_in(&self, vars: &[Var]) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree_in(vars))
            .max()
            .map_or(Degree::NegInf, Degree::Fin)
    }

    pub fn degree_in_var(&self, v: Var) -> Degree {
        self.degree_in(&[v])
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree {
            deg_su: self.degree_in(VarGroup::SU.vars()),
            deg_tv: self.degree_in(VarGroup::TV.vars()),
            deg_coords: self.degree_in(VarGroup::Coords.vars()),
        }
    }

    /// True when every term has the same degree with respect to the group.
    /// The zero polynomial is homogeneous.
    pub fn is_homogeneous_in(&self, group: VarGroup) -> bool {
        let vars = group.vars();
        let mut it = self.terms.keys().map(|m| m.degree_in(vars));
        match it.next() {
            None => true,
            Some(d0) => it.all(|d| d == d0),
        }
    }

    /// Variables that actually occur.
    pub fn vars_present(&self) -> Vec<Var> {
        let mut seen = [false; 8];
        for m in self.terms.keys() {
            for i in 0..8 {
                if m.0[i] > 0 {
                    seen[i] = true;
                }
            }
        }
        Var::ALL
            .iter()
            .copied()
            .filter(|v| seen[v.index()])
            .collect()
    }

    pub fn uses_only(&self, vars: &[Var]) -> bool {
        self.vars_present().iter().all(|v| vars.contains(v))
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Monomial::ONE,
        };
        it.fold(first, |acc, m| acc.min_with(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    (
                        k.checked_div(m).expect("div_monomial: not divisible"),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Coefficients with respect to one variable, ascending by exponent.
    /// `result[i]` is the coefficient of `v^i` and is free of `v`.
    pub fn coeffs_wrt(&self, v: Var) -> Vec<MultiPoly> {
        let d = match self.degree_in_var(v).finite() {
            Some(d) => d,
            None => return vec![],
        };
        let i = v.index();
        let mut out = vec![MultiPoly::zero(); d as usize + 1];
        for (m, c) in self.terms() {
            let e = m.0[i];
            let mut exps = m.0;
            exps[i] = 0;
            out[e as usize].add_term(c, &Monomial(exps));
        }
        out
    }

    pub fn from_coeffs_wrt(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add_ref(&c.mul_monomial(&Monomial::var_pow(v, e as u32)));
        }
        out
    }

    /// Positive rational c such that self/c has coprime integer coefficients.
    /// Zero gives 1.
    pub fn content_rational(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Write self as unit * primitive where primitive has coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), MultiPoly::zero());
        }
        let mut unit = self.content_rational();
        if self.leading_coefficient().unwrap().is_negative() {
            unit = -unit;
        }
        let inv = unit.recip();
        (unit, self.mul_scalar(&inv))
    }

    /// Drop terms whose total degree in `vars` exceeds `max`.
    pub fn truncate_degree_in(&self, vars: &[Var], max: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(vars) <= max)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The terms whose total degree in `vars` is exactly `d`.
    pub fn homogeneous_part_in(&self, vars: &[Var], d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(vars) == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_ref(rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.sub_ref(rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::printer::print_poly(self, crate::printer::PrintStyle::Plain))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::Var::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn add_cancellation() {
        let s = v(S);
        let u = v(U);
        // (s+u) + (s-u) = 2s
        let sum = &(&s + &u) + &(&s - &u);
        assert_eq!(sum, s.mul_scalar(&rat(2)));
        // p + 0 = p
        let p = &(&s * &s) - &u;
        assert_eq!(p.add_ref(&MultiPoly::zero()), p);
        // t^2*w - t^2*w = 0
        let t2w = v(T).pow(2).mul_ref(&v(W));
        assert!(t2w.sub_ref(&t2w).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let s = v(S);
        let u = v(U);
        let prod = (&s + &u).mul_ref(&(&s - &u));
        let expect = &s.pow(2) - &u.pow(2);
        assert_eq!(prod, expect);
        assert_eq!(prod.mul_ref(&MultiPoly::one()), prod);
    }

    #[test]
    fn surface_coordinate_expansion() {
        // f = (s^3, s^2 u, ..), g = (t^2, v^2, ..): f0*g1 + f1*g0 = s^3 v^2 + s^2 u t^2
        let f0 = v(S).pow(3);
        let f1 = v(S).pow(2).mul_ref(&v(U));
        let g0 = v(T).pow(2);
        let g1 = v(V).pow(2);
        let h1 = &(&f0 * &g1) + &(&f1 * &g0);
        let expect = &v(S).pow(3).mul_ref(&v(V).pow(2))
            + &v(S).pow(2).mul_ref(&v(U)).mul_ref(&v(T).pow(2));
        assert_eq!(h1, expect);
    }

    #[test]
    fn div_exact_basic() {
        let s = v(S);
        let u = v(U);
        let p = &s.pow(2) - &u.pow(2);
        let q = &s - &u;
        assert_eq!(p.div_exact(&q).unwrap(), (&s + &u));
        // 2t^3wz / t = 2t^2wz
        let p2 = v(T).pow(3).mul_ref(&v(W)).mul_ref(&v(Z)).mul_scalar(&rat(2));
        let q2 = v(T);
        assert_eq!(
            p2.div_exact(&q2).unwrap(),
            v(T).pow(2).mul_ref(&v(W)).mul_ref(&v(Z)).mul_scalar(&rat(2))
        );
        assert_eq!(p.div_exact(&v(T)), Err(ArithError::NotDivisible));
        assert_eq!(
            p.div_exact(&MultiPoly::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn substitution() {
        // substitute(s^2, s -> t) = t^2
        let p = v(S).pow(2);
        assert_eq!(p.substitute(&[(S, v(T))]), v(T).pow(2));
        // identity on empty bindings
        assert_eq!(p.substitute(&[]), p);
        // ring homomorphism spot check
        let q = &v(S) + &v(U);
        let r = &v(S) - &v(U);
        let b = vec![(S, &v(T) + &v(V)), (U, v(W).mul_scalar(&rat(3)))];
        let lhs = (&q * &r).substitute(&b);
        let rhs = q.substitute(&b).mul_ref(&r.substitute(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bidegree_and_homogeneity() {
        // s^3 t v + u^3 t^2: deg_su 3, deg_tv 2, deg_coords 0
        let p = &v(S).pow(3).mul_ref(&v(T)).mul_ref(&v(V)) + &v(U).pow(3).mul_ref(&v(T).pow(2));
        let bd = p.bidegree();
        assert_eq!(bd.deg_su, Degree::Fin(3));
        assert_eq!(bd.deg_tv, Degree::Fin(2));
        assert_eq!(bd.deg_coords, Degree::Fin(0));
        assert!(p.is_homogeneous_in(VarGroup::SU));
        assert!(!p.is_homogeneous_in(VarGroup::TV));
        // s + t is not su-homogeneous
        assert!(!(&v(S) + &v(T)).is_homogeneous_in(VarGroup::SU));
        // zero polynomial: minus infinity everywhere
        assert_eq!(MultiPoly::zero().bidegree().deg_su, Degree::NegInf);
    }

    #[test]
    fn primitive_part_normalization() {
        // -4s + 2u = -2 * (2s - u)
        let p = &v(S).mul_scalar(&rat(-4)) + &v(U).mul_scalar(&rat(2));
        let (unit, prim) = p.primitive_part();
        assert_eq!(unit, rat(-2));
        assert_eq!(prim, &v(S).mul_scalar(&rat(2)) - &v(U));
        assert_eq!(prim.mul_scalar(&unit), p);
    }
}
