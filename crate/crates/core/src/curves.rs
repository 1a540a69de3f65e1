//! Generating curves: validation, span dimension, and syzygy bases.
//!
//! A space curve here is a quadruple of degree-m forms in one parameter pair
//! with no common factor. Its syzygy module is free of rank three; we find a
//! basis degree by degree with exact kernel computations and normalize it so
//! the signed maximal minors of the syzygy matrix reproduce the curve.

use crate::gcd::gcd_vector;
use crate::linalg::{Eliminator, QMat};
use crate::monomial::Monomial;
use crate::poly::{MultiPoly, Rational};
use crate::vars::{Pair, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("entry {index} is not a form in the parameter pair")]
    NotHomogeneous { index: usize },
    #[error("nonzero entries have different degrees")]
    MixedDegrees,
    #[error("entries share the common factor {0}")]
    CommonFactor(MultiPoly),
    #[error("all four entries are zero")]
    ZeroCurve,
    #[error("constant parameterizations are rejected")]
    DegreeZero,
}

/// A validated curve parameterization: four forms of equal degree in one
/// parameter pair, with gcd one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParam {
    polys: [MultiPoly; 4],
    degree: u32,
    pair: Pair,
}

impl CurveParam {
    pub fn polys(&self) -> &[MultiPoly; 4] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &MultiPoly {
        &self.polys[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn pair(&self) -> Pair {
        self.pair
    }

    /// Rename the parameter variables to move the curve to the other pair.
    pub fn swap_pair(&self) -> CurveParam {
        let (a, b) = self.pair.vars();
        let (c, d) = self.pair.other().vars();
        let map = [(a, c), (b, d)];
        CurveParam {
            polys: std::array::from_fn(|i| self.polys[i].rename_vars(&map)),
            degree: self.degree,
            pair: self.pair.other(),
        }
    }
}

pub fn validate_curve(polys: [MultiPoly; 4], pair: Pair) -> Result<CurveParam, CurveError> {
    if polys.iter().all(|p| p.is_zero()) {
        return Err(CurveError::ZeroCurve);
    }
    let (x, y) = pair.vars();
    let pair_vars = [x, y];
    let mut degree: Option<u32> = None;
    for (index, p) in polys.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !p.uses_only(&pair_vars) || !p.is_homogeneous_in(pair.group()) {
            return Err(CurveError::NotHomogeneous { index });
        }
        let d = p.degree_in(&pair_vars).finite().unwrap();
        match degree {
            None => degree = Some(d),
            Some(m) if m != d => return Err(CurveError::MixedDegrees),
            _ => {}
        }
    }
    let degree = degree.unwrap();
    if degree == 0 {
        return Err(CurveError::DegreeZero);
    }
    let g = gcd_vector(&polys).expect("not all zero");
    if !g.is_constant() {
        return Err(CurveError::CommonFactor(g));
    }
    Ok(CurveParam { polys, degree, pair })
}

/// Dimension of the coefficient span of the four forms: 2 for a line,
/// 3 for a planar curve, 4 for a spatial curve.
pub fn span_dimension(f: &CurveParam) -> u32 {
    let m = f.degree;
    let rows: Vec<Vec<Rational>> = f
        .polys
        .iter()
        .map(|p| form_coeff_vec(p, f.pair, m))
        .collect();
    QMat::from_rows(rows).rank() as u32
}

/// Coefficients of a degree-d form, descending by the dominant variable.
fn form_coeff_vec(p: &MultiPoly, pair: Pair, d: u32) -> Vec<Rational> {
    let (x, _) = pair.vars();
    let mut out = vec![Rational::zero(); d as usize + 1];
    for (m, c) in p.terms() {
        let e = m.exponent(x);
        out[(d - e) as usize] = c.clone();
    }
    out
}

fn form_from_coeff_vec(coeffs: &[Rational], pair: Pair, d: u32) -> MultiPoly {
    let (x, y) = pair.vars();
    let mut p = MultiPoly::zero();
    for (idx, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = d - idx as u32;
        let mut exps = [0u32; 8];
        exps[x.index()] = e;
        exps[y.index()] = d - e;
        p = p.add_ref(&MultiPoly::term(c.clone(), Monomial(exps)));
    }
    p
}

/// An ordered syzygy basis of a curve with degrees mu1 <= mu2 <= mu3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuBasis {
    pub columns: [[MultiPoly; 4]; 3],
    pub degrees: [u32; 3],
}

impl MuBasis {
    pub fn column(&self, i: usize) -> &[MultiPoly; 4] {
        &self.columns[i]
    }
}

/// Compute a mu-basis by ascending-degree kernel computations.
///
/// At each degree the full syzygy space is the kernel of an exact rational
/// linear system; vectors independent of earlier generators (times forms)
/// are new basis columns. Finally one column is scaled so the signed minors
/// of the basis matrix reproduce the curve exactly.
pub fn mu_basis(f: &CurveParam) -> MuBasis {
    let m = f.degree;
    let mut gens: Vec<(u32, [MultiPoly; 4])> = Vec::new();
    'outer: for d in 0..=m {
        let mut span = Eliminator::new();
        for (mu, cols) in &gens {
            let free = d - mu;
            for a in (0..=free).rev() {
                let mono = pair_monomial(f.pair, a, free - a);
                let shifted: [MultiPoly; 4] =
                    std::array::from_fn(|i| cols[i].mul_monomial(&mono));
                let vec = syzygy_coeff_vec(&shifted, f.pair, d);
                span.insert(vec);
            }
        }
        let system = syzygy_system(f, d);
        for v in system.kernel_basis() {
            if let Some(reduced) = span.insert(v) {
                gens.push((d, vec_to_syzygy(&reduced, f.pair, d)));
                if gens.len() == 3 {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(gens.len(), 3, "syzygy module of a gcd-one curve has rank 3");
    let degrees = [gens[0].0, gens[1].0, gens[2].0];
    let mut columns = [
        gens[0].1.clone(),
        gens[1].1.clone(),
        gens[2].1.clone(),
    ];
    // Scale the last column so that (-1)^i det(basis with row i deleted)
    // equals f_i exactly, not merely up to a unit.
    let minors = signed_minors_4x3(&columns);
    let witness = (0..4)
        .find(|&i| !minors[i].is_zero())
        .expect("basis has rank 3");
    let kappa = ratio_of(f.poly(witness), &minors[witness]);
    if !kappa.is_one() {
        for entry in columns[2].iter_mut() {
            *entry = entry.mul_scalar(&kappa);
        }
    }
    debug_assert!({
        let check = signed_minors_4x3(&columns);
        (0..4).all(|i| &check[i] == f.poly(i))
    });
    MuBasis { columns, degrees }
}

fn pair_monomial(pair: Pair, ex: u32, ey: u32) -> Monomial {
    let (x, y) = pair.vars();
    let mut exps = [0u32; 8];
    exps[x.index()] = ex;
    exps[y.index()] = ey;
    Monomial(exps)
}

/// Linear system whose kernel is the degree-d piece of syz(f): unknowns are
/// the coefficients of a candidate 4-vector of degree-d forms, equations the
/// coefficients of the degree-(m+d) product form.
fn syzygy_system(f: &CurveParam, d: u32) -> QMat {
    let m = f.degree;
    let rows = (m + d + 1) as usize;
    let cols = 4 * (d + 1) as usize;
    let mut mat = QMat::zero(rows, cols);
    let (x, _) = f.pair.vars();
    for (i, fi) in f.polys.iter().enumerate() {
        for (mono, c) in fi.terms() {
            let k = mono.exponent(x);
            for j in 0..=d {
                let col = i * (d as usize + 1) + (d - j) as usize;
                let row = ((m + d) - (k + j)) as usize;
                *mat.at_mut(row, col) += c;
            }
        }
    }
    mat
}

fn syzygy_coeff_vec(cols: &[MultiPoly; 4], pair: Pair, d: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(4 * (d as usize + 1));
    for p in cols {
        out.extend(form_coeff_vec(p, pair, d));
    }
    out
}

fn vec_to_syzygy(v: &[Rational], pair: Pair, d: u32) -> [MultiPoly; 4] {
    let width = d as usize + 1;
    let cleared = clear_to_integer_primitive(v);
    std::array::from_fn(|i| form_from_coeff_vec(&cleared[i * width..(i + 1) * width], pair, d))
}

/// Scale a rational vector so its entries are coprime integers and the first
/// nonzero entry is positive.
fn clear_to_integer_primitive(v: &[Rational]) -> Vec<Rational> {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in v {
        if c.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if num_gcd.is_zero() {
        return v.to_vec();
    }
    let mut scale = Rational::new(den_lcm, num_gcd);
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if (first * &scale).is_negative() {
            scale = -scale;
        }
    }
    v.iter().map(|c| c * &scale).collect()
}

/// c with p = c * q, for nonzero associate polynomials p and q.
fn ratio_of(p: &MultiPoly, q: &MultiPoly) -> Rational {
    let pm = p.leading_monomial().expect("nonzero");
    let pc = p.leading_coefficient().unwrap();
    let qc = q.coefficient(pm);
    assert!(!qc.is_zero(), "polynomials are not associate");
    pc / &qc
}

/// Signed 3x3 minors of a 4x3 polynomial matrix given by columns:
/// result[i] = (-1)^i * det(matrix with row i deleted).
pub fn signed_minors_4x3(cols: &[[MultiPoly; 4]; 3]) -> [MultiPoly; 4] {
    std::array::from_fn(|skip| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
        let det = det3(
            [
                [&cols[0][rows[0]], &cols[1][rows[0]], &cols[2][rows[0]]],
                [&cols[0][rows[1]], &cols[1][rows[1]], &cols[2][rows[1]]],
                [&cols[0][rows[2]], &cols[1][rows[2]], &cols[2][rows[2]]],
            ],
        );
        if skip % 2 == 0 {
            det
        } else {
            det.neg_ref()
        }
    })
}

fn det3(m: [[&MultiPoly; 3]; 3]) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    let perms: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([0, 2, 1], true),
        ([1, 0, 2], true),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([2, 1, 0], true),
    ];
    for (p, odd) in perms {
        let t = m[0][p[0]].mul_ref(m[1][p[1]]).mul_ref(m[2][p[2]]);
        acc = if odd { acc.sub_ref(&t) } else { acc.add_ref(&t) };
    }
    acc
}

/// Dot product of the curve with a 4-vector; zero exactly for syzygies.
pub fn dot(f: &CurveParam, cols: &[MultiPoly; 4]) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for i in 0..4 {
        acc = acc.add_ref(&f.poly(i).mul_ref(&cols[i]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn curve(srcs: [&str; 4], pair: Pair) -> CurveParam {
        let vars = pair.group().vars();
        let polys = srcs.map(|s| parse_poly(s, vars).unwrap());
        validate_curve(polys, pair).unwrap()
    }

    fn twisted_cubic() -> CurveParam {
        curve(["s^3", "s^2*u", "s*u^2", "u^3"], Pair::SU)
    }

    fn planar_cubic() -> CurveParam {
        curve(["s^3", "0", "s^2*u", "u^3"], Pair::SU)
    }

    #[test]
    fn validation() {
        assert_eq!(twisted_cubic().degree(), 3);
        let g = curve(["t^2", "t*v", "0", "-v^2"], Pair::TV);
        assert_eq!(g.degree(), 2);

        let vars = Pair::SU.group().vars();
        let scaled = ["s^2", "s*u", "s^2 + s*u", "s*u - s^2"]
            .map(|s| parse_poly(s, vars).unwrap());
        match validate_curve(scaled, Pair::SU) {
            Err(CurveError::CommonFactor(g)) => assert_eq!(g, MultiPoly::var(Var::S)),
            other => panic!("expected common factor, got {:?}", other),
        }

        let mixed = ["s^2", "s", "u^2", "s*u"].map(|s| parse_poly(s, vars).unwrap());
        assert_eq!(validate_curve(mixed, Pair::SU), Err(CurveError::MixedDegrees));

        let zero = std::array::from_fn(|_| MultiPoly::zero());
        assert_eq!(validate_curve(zero, Pair::SU), Err(CurveError::ZeroCurve));

        let constants = ["1", "2", "3", "5"].map(|s| parse_poly(s, vars).unwrap());
        assert_eq!(validate_curve(constants, Pair::SU), Err(CurveError::DegreeZero));

        let inhom = ["s^2 + u", "s*u", "u^2", "s^2"].map(|s| parse_poly(s, vars).unwrap());
        assert!(matches!(
            validate_curve(inhom, Pair::SU),
            Err(CurveError::NotHomogeneous { index: 0 })
        ));
    }

    #[test]
    fn span_dimensions() {
        assert_eq!(span_dimension(&curve(["s", "u", "s + u", "s - u"], Pair::SU)), 2);
        assert_eq!(span_dimension(&planar_cubic()), 3);
        assert_eq!(span_dimension(&twisted_cubic()), 4);
    }

    #[test]
    fn mu_basis_twisted_cubic() {
        let f = twisted_cubic();
        let mb = mu_basis(&f);
        assert_eq!(mb.degrees, [1, 1, 1]);
        let vars = Pair::SU.group().vars();
        let expect_a = ["u", "-s", "0", "0"].map(|s| parse_poly(s, vars).unwrap());
        let expect_b = ["0", "u", "-s", "0"].map(|s| parse_poly(s, vars).unwrap());
        // last column carries the normalization unit
        let expect_c = ["0", "0", "-u", "s"].map(|s| parse_poly(s, vars).unwrap());
        assert_eq!(mb.columns[0], expect_a);
        assert_eq!(mb.columns[1], expect_b);
        assert_eq!(mb.columns[2], expect_c);
        for col in &mb.columns {
            assert!(dot(&f, col).is_zero());
        }
    }

    #[test]
    fn mu_basis_planar_cubic() {
        let f = planar_cubic();
        let mb = mu_basis(&f);
        assert_eq!(mb.degrees, [0, 1, 2]);
        let vars = Pair::SU.group().vars();
        let expect_a = ["0", "1", "0", "0"].map(|s| parse_poly(s, vars).unwrap());
        let expect_b = ["u", "0", "-s", "0"].map(|s| parse_poly(s, vars).unwrap());
        let expect_c = ["0", "0", "u^2", "-s^2"].map(|s| parse_poly(s, vars).unwrap());
        assert_eq!(mb.columns[0], expect_a);
        assert_eq!(mb.columns[1], expect_b);
        assert_eq!(mb.columns[2], expect_c);
        let minors = signed_minors_4x3(&mb.columns);
        for i in 0..4 {
            assert_eq!(&minors[i], f.poly(i));
        }
    }

    #[test]
    fn minor_reconstruction_twisted_cubic() {
        let f = twisted_cubic();
        let mb = mu_basis(&f);
        let minors = signed_minors_4x3(&mb.columns);
        for i in 0..4 {
            assert_eq!(&minors[i], f.poly(i), "minor {} mismatch", i);
        }
    }

    #[test]
    fn line_has_two_constant_syzygies() {
        let f = curve(["s", "u", "s + u", "s - u"], Pair::SU);
        let mb = mu_basis(&f);
        assert_eq!(mb.degrees, [0, 0, 1]);
        for col in &mb.columns[..2] {
            for e in col {
                assert!(e.is_constant());
            }
        }
    }
}
