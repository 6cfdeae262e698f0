//! `sl2` in the equitable basis `X, Y, Z`:
//! `[X,Y] = 2X+2Y`, `[Y,Z] = 2Y+2Z`, `[Z,X] = 2Z+2X`.
//!
//! The Chevalley basis `e, f, h` is only reachable through
//! [`efh_to_equitable`] and [`equitable_to_efh`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::rational::{frac, push_term, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sl2Elem {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Sl2Elem {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Sl2Elem { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Self::new(rat(x), rat(y), rat(z))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis_x() -> Self {
        Self::from_i64(1, 0, 0)
    }

    pub fn basis_y() -> Self {
        Self::from_i64(0, 1, 0)
    }

    pub fn basis_z() -> Self {
        Self::from_i64(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.x * c, &self.y * c, &self.z * c)
    }

    pub fn bracket(&self, other: &Sl2Elem) -> Sl2Elem {
        sl2_bracket(self, other)
    }

    /// `X -> Y -> Z -> X`.
    pub fn prime(&self) -> Sl2Elem {
        Sl2Elem::new(self.z.clone(), self.x.clone(), self.y.clone())
    }

    /// `X -> -Y`, `Y -> -X`, `Z -> -Z`.
    pub fn omega(&self) -> Sl2Elem {
        Sl2Elem::new(-&self.y, -&self.x, -&self.z)
    }
}

/// Structure constants of the equitable basis, shared with the loop algebra:
/// given the three 2x2 minors `xy = x1 y2 - y1 x2`, `yz`, `zx`, the bracket is
/// `X(2xy + 2zx) + Y(2xy + 2yz) + Z(2yz + 2zx)`.
pub(crate) fn equitable_bracket<R>(
    u: [&R; 3],
    v: [&R; 3],
    mul: impl Fn(&R, &R) -> R,
    add: impl Fn(&R, &R) -> R,
    sub: impl Fn(&R, &R) -> R,
    double: impl Fn(&R) -> R,
) -> [R; 3] {
    let minor = |i: usize, j: usize| sub(&mul(u[i], v[j]), &mul(u[j], v[i]));
    let xy = minor(0, 1);
    let yz = minor(1, 2);
    let zx = minor(2, 0);
    [
        double(&add(&xy, &zx)),
        double(&add(&xy, &yz)),
        double(&add(&yz, &zx)),
    ]
}

pub fn sl2_bracket(u: &Sl2Elem, v: &Sl2Elem) -> Sl2Elem {
    let [x, y, z] = equitable_bracket(
        [&u.x, &u.y, &u.z],
        [&v.x, &v.y, &v.z],
        |a, b| a * b,
        |a, b| a + b,
        |a, b| a - b,
        |a| a * rat(2),
    );
    Sl2Elem { x, y, z }
}

/// Image of `ce*e + cf*f + ch*h` under `e -> (X+Z)/2`, `f -> -(Y+Z)/2`,
/// `h -> Z`.
pub fn efh_to_equitable(ce: &Rational, cf: &Rational, ch: &Rational) -> Sl2Elem {
    let half = frac(1, 2);
    Sl2Elem::new(
        ce * &half,
        -(cf * &half),
        ce * &half - cf * &half + ch,
    )
}

/// Inverse of [`efh_to_equitable`]: `X -> 2e - h`, `Y -> -2f - h`, `Z -> h`.
/// Returns the `(e, f, h)` coordinates.
pub fn equitable_to_efh(u: &Sl2Elem) -> (Rational, Rational, Rational) {
    (
        &u.x * rat(2),
        -(&u.y * rat(2)),
        &u.z - &u.x - &u.y,
    )
}

impl Add for &Sl2Elem {
    type Output = Sl2Elem;
    fn add(self, rhs: &Sl2Elem) -> Sl2Elem {
        Sl2Elem::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &Sl2Elem {
    type Output = Sl2Elem;
    fn sub(self, rhs: &Sl2Elem) -> Sl2Elem {
        Sl2Elem::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &Sl2Elem {
    type Output = Sl2Elem;
    fn neg(self) -> Sl2Elem {
        Sl2Elem::new(-&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Sl2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, name) in [(&self.x, "X"), (&self.y, "Y"), (&self.z, "Z")] {
            if !c.is_zero() {
                push_term(&mut out, c, Some(name));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
