//! Multivariate gcd over Q by content/primitive-part recursion with a
//! subresultant polynomial remainder sequence in the main variable.
//!
//! Results are normalized: coprime integer coefficients and positive leading
//! coefficient in the fixed monomial order. gcd(p, 0) is the normalization
//! of p; gcd(0, 0) is 0.

use crate::monomial::Monomial;
use crate::poly::{ArithError, MultiPoly};
use crate::vars::Var;

pub fn gcd_multi(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    normalize(&gcd_inner(p, q))
}

/// Gcd of a list of polynomials. Errors when every entry is zero.
pub fn gcd_vector(ps: &[MultiPoly]) -> Result<MultiPoly, ArithError> {
    if ps.iter().all(|p| p.is_zero()) {
        return Err(ArithError::AllZero);
    }
    let mut acc = MultiPoly::zero();
    for p in ps {
        acc = gcd_inner(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return Ok(MultiPoly::one());
        }
    }
    Ok(normalize(&acc))
}

fn normalize(p: &MultiPoly) -> MultiPoly {
    p.primitive_part().1
}

fn gcd_inner(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    // split off the monomial content: it contributes its componentwise min
    let mp = p.min_exponents();
    let mq = q.min_exponents();
    let common = mp.min_with(&mq);
    let ps = p.div_monomial(&mp);
    let qs = q.div_monomial(&mq);
    let core = gcd_stripped(&ps, &qs);
    core.mul_monomial(&common)
}

fn gcd_stripped(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    let main = main_variable(p, q);
    let (cont_p, prim_p) = content_and_primitive(p, main);
    let (cont_q, prim_q) = content_and_primitive(q, main);
    let cont = gcd_inner(&cont_p, &cont_q);
    let prim = prs_gcd(&prim_p, &prim_q, main);
    cont.mul_ref(&prim)
}

fn main_variable(p: &MultiPoly, q: &MultiPoly) -> Var {
    for v in Var::ALL {
        if p.degree_in_var(v).finite().unwrap_or(0) > 0
            || q.degree_in_var(v).finite().unwrap_or(0) > 0
        {
            return v;
        }
    }
    unreachable!("nonconstant polynomial without variables")
}

/// Content (gcd of coefficients) and primitive part with respect to `v`.
fn content_and_primitive(p: &MultiPoly, v: Var) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coeffs_wrt(v);
    let content = gcd_vector(&coeffs).expect("nonzero polynomial has a nonzero coefficient");
    if content.is_one() {
        return (content, p.clone());
    }
    let prim = p.div_exact(&content).expect("content divides");
    (content, prim)
}

fn deg(p: &MultiPoly, v: Var) -> u32 {
    p.degree_in_var(v).finite().unwrap_or(0)
}

fn lead_coeff(p: &MultiPoly, v: Var) -> MultiPoly {
    let d = deg(p, v);
    let coeffs = p.coeffs_wrt(v);
    coeffs[d as usize].clone()
}

/// Pseudo remainder of a by b with respect to v: lc(b)^(da-db+1) * a mod b.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = deg(b, v);
    let lcb = lead_coeff(b, v);
    let mut r = a.clone();
    let mut e = deg(a, v) as i64 - db as i64 + 1;
    while !r.is_zero() && deg(&r, v) >= db {
        let d = deg(&r, v);
        let c = lead_coeff(&r, v);
        let shift = Monomial::var_pow(v, d - db);
        r = &r.mul_ref(&lcb) - &c.mul_ref(&b.mul_monomial(&shift));
        e -= 1;
    }
    while e > 0 {
        r = r.mul_ref(&lcb);
        e -= 1;
    }
    r
}

/// Subresultant PRS gcd of two polynomials primitive in `v`.
fn prs_gcd(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let (mut a, mut b) = if deg(p, v) >= deg(q, v) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    if deg(&b, v) == 0 {
        // a primitive polynomial cannot share a factor with a v-free one here
        return MultiPoly::one();
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let delta = deg(&a, v) - deg(&b, v);
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return content_and_primitive(&b, v).1;
        }
        if deg(&r, v) == 0 {
            return MultiPoly::one();
        }
        let divisor = g.mul_ref(&h.pow(delta));
        a = b;
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = lead_coeff(&a, v);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::vars::Var::*;

    fn v(x: Var) -> MultiPoly {
        MultiPoly::var(x)
    }

    #[test]
    fn monomial_content_case() {
        // gcd(t^2 (s+u), t^3 (s-u)) = t^2
        let p = v(T).pow(2).mul_ref(&(&v(S) + &v(U)));
        let q = v(T).pow(3).mul_ref(&(&v(S) - &v(U)));
        assert_eq!(gcd_multi(&p, &q), v(T).pow(2));
    }

    #[test]
    fn idempotence_and_zero() {
        let p = (&v(S) + &v(U)).mul_scalar(&rat(-3));
        assert_eq!(gcd_multi(&p, &p), &v(S) + &v(U));
        assert_eq!(gcd_multi(&p, &MultiPoly::zero()), &v(S) + &v(U));
        assert!(gcd_multi(&MultiPoly::zero(), &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn planted_common_factor() {
        let g = &v(S).mul_ref(&v(T)) + &v(U).mul_ref(&v(V));
        let p = g.mul_ref(&(&v(S) + &v(T)));
        let q = g.mul_ref(&(&v(U) - &v(V).mul_scalar(&rat(2))));
        let d = gcd_multi(&p, &q);
        assert_eq!(d, g);
        assert!(d.divides(&p));
        assert!(d.divides(&q));
    }

    #[test]
    fn coprime_inputs() {
        let p = &v(S).pow(2) + &v(U).pow(2);
        let q = &v(S) + &v(T);
        assert!(gcd_multi(&p, &q).is_one());
    }

    #[test]
    fn vector_gcd() {
        let g = &v(T) - &v(V);
        let ps = vec![
            g.mul_ref(&v(S)),
            g.mul_ref(&v(U).pow(2)),
            g.mul_ref(&(&v(T) + &v(V))),
        ];
        assert_eq!(gcd_vector(&ps).unwrap(), g);
        assert_eq!(
            gcd_vector(&[MultiPoly::zero(), MultiPoly::zero()]),
            Err(ArithError::AllZero)
        );
        // zero entries are skipped
        let with_zero = vec![MultiPoly::zero(), g.mul_ref(&v(S)), g.clone()];
        assert_eq!(gcd_vector(&with_zero).unwrap(), g);
    }

    #[test]
    fn rational_coefficients_normalize() {
        // gcd is primitive over Z with positive lead even for fractional input
        let g = &v(S).mul_scalar(&crate::poly::rat_frac(1, 2)) - &v(U).mul_scalar(&rat(3));
        let p = g.mul_ref(&v(T));
        let q = g.mul_ref(&v(V));
        assert_eq!(gcd_multi(&p, &q), &v(S) - &v(U).mul_scalar(&rat(6)));
    }
}
