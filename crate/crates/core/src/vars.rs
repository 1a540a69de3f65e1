//! The fixed variable set and its groupings.
//!
//! Every polynomial in this crate lives in Q[s,u,t,v,w,x,y,z]. The pairs
//! (s,u) and (t,v) are the projective parameters of the two generating
//! curves; w,x,y,z are the coordinates of P^3.

use std::fmt;

/// One of the eight ring variables, in fixed precedence order
/// s > u > t > v > w > x > y > z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S = 0,
    U = 1,
    T = 2,
    V = 3,
    W = 4,
    X = 5,
    Y = 6,
    Z = 7,
}

impl Var {
    pub const ALL: [Var; 8] = [
        Var::S,
        Var::U,
        Var::T,
        Var::V,
        Var::W,
        Var::X,
        Var::Y,
        Var::Z,
    ];

    pub const COORDS: [Var; 4] = [Var::W, Var::X, Var::Y, Var::Z];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn as_char(self) -> char {
        match self {
            Var::S => 's',
            Var::U => 'u',
            Var::T => 't',
            Var::V => 'v',
            Var::W => 'w',
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            's' => Some(Var::S),
            'u' => Some(Var::U),
            't' => Some(Var::T),
            'v' => Some(Var::V),
            'w' => Some(Var::W),
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A projective parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    SU,
    TV,
}

impl Pair {
    /// The two variables of the pair, dominant one first.
    pub fn vars(self) -> (Var, Var) {
        match self {
            Pair::SU => (Var::S, Var::U),
            Pair::TV => (Var::T, Var::V),
        }
    }

    pub fn other(self) -> Pair {
        match self {
            Pair::SU => Pair::TV,
            Pair::TV => Pair::SU,
        }
    }

    pub fn group(self) -> VarGroup {
        match self {
            Pair::SU => VarGroup::SU,
            Pair::TV => VarGroup::TV,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.vars();
        write!(f, "{}{}", a, b)
    }
}

/// A degree grouping of the variables: the two parameter pairs and the
/// coordinates of P^3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarGroup {
    SU,
    TV,
    Coords,
}

impl VarGroup {
    pub fn vars(self) -> &'static [Var] {
        match self {
            VarGroup::SU => &[Var::S, Var::U],
            VarGroup::TV => &[Var::T, Var::V],
            VarGroup::Coords => &Var::COORDS,
        }
    }
}
