//! The translational surface h built from two generating curves, the matrix
//! pair that transports curve syzygies to surface syzygies, and the reduced
//! syzygies A, B, C with their moving planes.

use crate::curves::{signed_minors_4x3, CurveParam, MuBasis};
use crate::gcd::gcd_vector;
use crate::poly::{rat_frac, MultiPoly, Rational};
use crate::vars::{Pair, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// h = (2 f0 g0, f0 g1 + f1 g0, f0 g2 + f2 g0, f0 g3 + f3 g0).
#[derive(Debug, Clone)]
pub struct SurfaceParam {
    pub h: [MultiPoly; 4],
    pub f: CurveParam,
    pub g: CurveParam,
}

impl SurfaceParam {
    pub fn bidegree(&self) -> (u32, u32) {
        (self.f.degree(), self.g.degree())
    }
}

pub fn build_surface(f: &CurveParam, g: &CurveParam) -> SurfaceParam {
    assert_eq!(f.pair(), Pair::SU, "f parameterizes over (s,u)");
    assert_eq!(g.pair(), Pair::TV, "g parameterizes over (t,v)");
    let f0 = f.poly(0);
    let g0 = g.poly(0);
    let h: [MultiPoly; 4] = std::array::from_fn(|i| {
        if i == 0 {
            f0.mul_ref(g0).mul_scalar(&crate::poly::rat(2))
        } else {
            &f0.mul_ref(g.poly(i)) + &f.poly(i).mul_ref(g0)
        }
    });
    SurfaceParam {
        h,
        f: f.clone(),
        g: g.clone(),
    }
}

/// N_g: first row (g0/2, -g1/2, -g2/2, -g3/2), then g0 on the diagonal.
pub fn n_matrix(g: &CurveParam) -> [[MultiPoly; 4]; 4] {
    let half = rat_frac(1, 2);
    let mut m: [[MultiPoly; 4]; 4] = Default::default();
    m[0][0] = g.poly(0).mul_scalar(&half);
    for j in 1..4 {
        m[0][j] = g.poly(j).mul_scalar(&-half.clone());
    }
    for i in 1..4 {
        m[i][i] = g.poly(0).clone();
    }
    m
}

/// M_g: first row (2g0, g1, g2, g3), then g0 on the diagonal.
pub fn m_matrix(g: &CurveParam) -> [[MultiPoly; 4]; 4] {
    let mut m: [[MultiPoly; 4]; 4] = Default::default();
    m[0][0] = g.poly(0).mul_scalar(&crate::poly::rat(2));
    for j in 1..4 {
        m[0][j] = g.poly(j).clone();
    }
    for i in 1..4 {
        m[i][i] = g.poly(0).clone();
    }
    m
}

pub fn mat_mul_4(a: &[[MultiPoly; 4]; 4], b: &[[MultiPoly; 4]; 4]) -> [[MultiPoly; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = MultiPoly::zero();
            for k in 0..4 {
                acc = acc.add_ref(&a[i][k].mul_ref(&b[k][j]));
            }
            acc
        })
    })
}

pub fn mat_vec_4(a: &[[MultiPoly; 4]; 4], v: &[MultiPoly; 4]) -> [MultiPoly; 4] {
    std::array::from_fn(|i| {
        let mut acc = MultiPoly::zero();
        for k in 0..4 {
            acc = acc.add_ref(&a[i][k].mul_ref(&v[k]));
        }
        acc
    })
}

/// The reduced surface syzygies A, B, C obtained from a mu-basis of f.
///
/// Each N_g column is divided by the gcd of its entries and scaled to
/// coprime integer coefficients with a positive-leading first entry.
/// `removed_gcds` records the polynomial part of what was divided out;
/// `removed_units` the rational part. `g_poly` is g0^2 divided by the three
/// exact divisors, so the signed minors of [A B C] are exactly g_poly/2
/// times h.
#[derive(Debug, Clone)]
pub struct ReducedSyzygies {
    pub cols: [[MultiPoly; 4]; 3],
    pub removed_gcds: [MultiPoly; 3],
    pub removed_units: [Rational; 3],
    pub g_poly: MultiPoly,
}

impl ReducedSyzygies {
    /// The moving planes xA, xB, xC.
    pub fn moving_planes(&self) -> [MultiPoly; 3] {
        std::array::from_fn(|i| plane_of(&self.cols[i]))
    }
}

pub fn plane_of(col: &[MultiPoly; 4]) -> MultiPoly {
    let coords = [Var::W, Var::X, Var::Y, Var::Z];
    let mut acc = MultiPoly::zero();
    for (v, entry) in coords.iter().zip(col) {
        acc = acc.add_ref(&entry.mul_ref(&MultiPoly::var(*v)));
    }
    acc
}

pub fn reduced_syzygies(f: &CurveParam, g: &CurveParam, mu: &MuBasis) -> ReducedSyzygies {
    let ng = n_matrix(g);
    let mut cols: [[MultiPoly; 4]; 3] = Default::default();
    let mut removed_gcds: [MultiPoly; 3] = Default::default();
    let mut removed_units: [Rational; 3] = std::array::from_fn(|_| Rational::one());
    for k in 0..3 {
        let w = mat_vec_4(&ng, mu.column(k));
        let d = gcd_vector(&w).expect("syzygy image is nonzero");
        let raw: [MultiPoly; 4] = std::array::from_fn(|i| {
            w[i].div_exact(&d).expect("gcd divides every entry")
        });
        let (unit, cleared) = vector_primitive(&raw);
        cols[k] = cleared;
        removed_gcds[k] = d;
        removed_units[k] = unit;
    }
    let g0 = g.poly(0);
    let poly_divisor = removed_gcds[0]
        .mul_ref(&removed_gcds[1])
        .mul_ref(&removed_gcds[2]);
    let unit_divisor = &removed_units[0] * &removed_units[1] * &removed_units[2];
    let g_poly = g0
        .mul_ref(g0)
        .div_exact(&poly_divisor)
        .expect("product of removed gcds divides g0^2")
        .mul_scalar(&unit_divisor.recip());
    ReducedSyzygies {
        cols,
        removed_gcds,
        removed_units,
        g_poly,
    }
}

/// Unit u and primitive vector P with v = u * P: the entries of P have
/// coprime integer coefficients and the first nonzero entry has a positive
/// leading coefficient.
fn vector_primitive(v: &[MultiPoly; 4]) -> (Rational, [MultiPoly; 4]) {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for p in v {
        for (_, c) in p.terms() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    assert!(!num_gcd.is_zero(), "zero syzygy vector");
    let mut unit = Rational::new(num_gcd, den_lcm);
    let first = v.iter().find(|p| !p.is_zero()).unwrap();
    if (first.leading_coefficient().unwrap() / &unit).is_negative() {
        unit = -unit;
    }
    let inv = unit.recip();
    (unit, std::array::from_fn(|i| v[i].mul_scalar(&inv)))
}

/// Signed minors of [A B C]; by construction equal to g_poly/2 times h.
pub fn syzygy_minors(rs: &ReducedSyzygies) -> [MultiPoly; 4] {
    signed_minors_4x3(&rs.cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{mu_basis, validate_curve};
    use crate::parse::parse_poly;
    use crate::poly::rat;

    fn curve(srcs: [&str; 4], pair: Pair) -> CurveParam {
        let vars = pair.group().vars();
        validate_curve(srcs.map(|s| parse_poly(s, vars).unwrap()), pair).unwrap()
    }

    fn example_a() -> (CurveParam, CurveParam) {
        (
            curve(["s^3", "s^2*u", "s*u^2", "u^3"], Pair::SU),
            curve(["t^2", "v^2", "t*v", "t*v"], Pair::TV),
        )
    }

    fn example_b() -> (CurveParam, CurveParam) {
        (
            curve(["s^3", "0", "s^2*u", "u^3"], Pair::SU),
            curve(["t^2", "t*v", "0", "-v^2"], Pair::TV),
        )
    }

    fn all(src: &str) -> MultiPoly {
        parse_poly(src, &Var::ALL).unwrap()
    }

    #[test]
    fn surface_coordinates() {
        let (f, g) = example_a();
        let s = build_surface(&f, &g);
        assert_eq!(s.h[0], all("2*s^3*t^2"));
        assert_eq!(s.h[1], all("s^3*v^2 + s^2*u*t^2"));
        assert_eq!(s.h[2], all("s^3*t*v + s*u^2*t^2"));
        assert_eq!(s.h[3], all("s^3*t*v + u^3*t^2"));
        assert!(gcd_vector(&s.h).unwrap().is_one());

        let (f, g) = example_b();
        let s = build_surface(&f, &g);
        assert_eq!(s.h[0], all("2*s^3*t^2"));
        assert_eq!(s.h[1], all("s^3*t*v"));
        assert_eq!(s.h[2], all("s^2*u*t^2"));
        assert_eq!(s.h[3], all("-s^3*v^2 + u^3*t^2"));
        assert!(gcd_vector(&s.h).unwrap().is_one());
    }

    #[test]
    fn n_matrix_first_rows() {
        let (_, g) = example_b();
        let n = n_matrix(&g);
        assert_eq!(n[0][0], all("1/2*t^2"));
        assert_eq!(n[0][1], all("-1/2*t*v"));
        assert_eq!(n[0][2], all("0"));
        assert_eq!(n[0][3], all("1/2*v^2"));

        let (_, g) = example_a();
        let n = n_matrix(&g);
        assert_eq!(n[0][0], all("1/2*t^2"));
        assert_eq!(n[0][1], all("-1/2*v^2"));
        assert_eq!(n[0][2], all("-1/2*t*v"));
        assert_eq!(n[0][3], all("-1/2*t*v"));
    }

    #[test]
    fn matrix_pair_identity() {
        for (_, g) in [example_a(), example_b()] {
            let prod = mat_mul_4(&m_matrix(&g), &n_matrix(&g));
            let back = mat_mul_4(&n_matrix(&g), &m_matrix(&g));
            let g0sq = g.poly(0).mul_ref(g.poly(0));
            for i in 0..4 {
                for j in 0..4 {
                    let expect = if i == j { g0sq.clone() } else { MultiPoly::zero() };
                    assert_eq!(prod[i][j], expect);
                    assert_eq!(back[i][j], expect);
                }
            }
        }
    }

    #[test]
    fn reduced_syzygies_spatial_example() {
        let (f, g) = example_a();
        let mu = mu_basis(&f);
        let rs = reduced_syzygies(&f, &g, &mu);
        assert_eq!(rs.removed_gcds[0], MultiPoly::one());
        assert_eq!(rs.removed_gcds[1], MultiPoly::one());
        assert_eq!(rs.removed_gcds[2], MultiPoly::var(Var::T));
        let [xa, xb, xc] = rs.moving_planes();
        assert_eq!(xa, all("u*t^2*w + s*v^2*w - 2*s*t^2*x"));
        assert_eq!(xb, all("s*t*v*w - u*v^2*w + 2*u*t^2*x - 2*s*t^2*y"));
        assert_eq!(xc, all("s*v*w - u*v*w + 2*u*t*y - 2*s*t*z"));
        // the syzygies annihilate h
        let s = build_surface(&f, &g);
        for col in &rs.cols {
            let mut acc = MultiPoly::zero();
            for i in 0..4 {
                acc = acc.add_ref(&s.h[i].mul_ref(&col[i]));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn reduced_syzygies_planar_example() {
        let (f, g) = example_b();
        let mu = mu_basis(&f);
        let rs = reduced_syzygies(&f, &g, &mu);
        assert_eq!(rs.removed_gcds[0], MultiPoly::var(Var::T));
        assert_eq!(rs.removed_gcds[1], MultiPoly::var(Var::T).pow(2));
        assert_eq!(rs.removed_gcds[2], MultiPoly::one());
        let [xa, xb, xc] = rs.moving_planes();
        assert_eq!(xa, all("v*w - 2*t*x"));
        assert_eq!(xb, all("u*w - 2*s*y"));
        assert_eq!(xc, all("s^2*v^2*w - 2*u^2*t^2*y + 2*s^2*t^2*z"));
    }

    #[test]
    fn minors_match_half_g_times_h() {
        for (f, g) in [example_a(), example_b()] {
            let mu = mu_basis(&f);
            let rs = reduced_syzygies(&f, &g, &mu);
            let s = build_surface(&f, &g);
            let minors = syzygy_minors(&rs);
            let half_g = rs.g_poly.mul_scalar(&rat_frac(1, 2));
            for i in 0..4 {
                assert_eq!(minors[i], half_g.mul_ref(&s.h[i]), "minor {}", i);
            }
            // removed gcds divide g0, their product divides g0^2
            let g0 = g.poly(0);
            for d in &rs.removed_gcds {
                assert!(d.divides(g0));
            }
            let prod = rs.removed_gcds[0]
                .mul_ref(&rs.removed_gcds[1])
                .mul_ref(&rs.removed_gcds[2]);
            assert!(prod.divides(&g0.mul_ref(g0)));
        }
    }

    #[test]
    fn degree_bookkeeping() {
        let (f, g) = example_a();
        let mu = mu_basis(&f);
        let rs = reduced_syzygies(&f, &g, &mu);
        let su = Pair::SU.group().vars();
        let tv = Pair::TV.group().vars();
        for (k, col) in rs.cols.iter().enumerate() {
            for e in col {
                if e.is_zero() {
                    continue;
                }
                assert_eq!(
                    e.degree_in(su).finite().unwrap(),
                    mu.degrees[k],
                    "su degree of column {}",
                    k
                );
                assert!(e.degree_in(tv).finite().unwrap() <= g.degree());
            }
        }
        let _ = rat(0);
    }
}
