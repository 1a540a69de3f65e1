//! Monomials over the fixed eight-variable set, ordered by graded reverse
//! lexicographic order with precedence s > u > t > v > w > x > y > z.

use crate::vars::Var;
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector, positionally bound to (s,u,t,v,w,x,y,z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 8]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 8]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut m = [0u32; 8];
        m[v.index()] = e;
        Monomial(m)
    }

    #[inline]
    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|v| self.0[v.index()]).sum()
    }

    /// Product of two monomials (exponentwise sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0u32; 8];
        for i in 0..8 {
            m[i] = self.0[i] + other.0[i];
        }
        Monomial(m)
    }

    /// Exact quotient, or None if some exponent of `other` exceeds ours.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = [0u32; 8];
        for i in 0..8 {
            m[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(m))
    }

    /// Componentwise minimum (the monomial gcd).
    pub fn min_with(&self, other: &Monomial) -> Monomial {
        let mut m = [0u32; 8];
        for i in 0..8 {
            m[i] = self.0[i].min(other.0[i]);
        }
        Monomial(m)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut m = [0u32; 8];
        for i in 0..8 {
            m[i] = self.0[i] * e;
        }
        Monomial(m)
    }

    /// Variables with nonzero exponent, in precedence order.
    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .iter()
            .filter_map(move |&v| {
                let e = self.0[v.index()];
                (e > 0).then_some((v, e))
            })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.total_degree();
        let db = other.total_degree();
        if da != db {
            return da.cmp(&db);
        }
        // Reverse lexicographic tie break: the monomial with the smaller
        // exponent at the rightmost differing position is the larger one.
        for i in (0..8).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}
