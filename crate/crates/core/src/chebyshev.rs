//! Chebyshev polynomials of the second kind, `U_n`, and the shifted family
//! `U_n(1 - 2x)` that gives graded bases of the `Δ` subalgebras.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};
use crate::ring::{Atom, RingElem};

/// `U_{-1}, U_0, ..., U_n` from `U_{n+1} = 2x U_n - U_{n-1}`.
fn sequence(n: usize) -> Vec<Polynomial> {
    let two_x = Polynomial::from_i64(&[0, 2]);
    let mut seq = vec![Polynomial::zero(), Polynomial::one()];
    while seq.len() < n + 2 {
        let k = seq.len();
        let next = &(&two_x * &seq[k - 1]) - &seq[k - 2];
        seq.push(next);
    }
    seq
}

/// `U_n(x)` for `n >= -1`; `U_{-1} = 0`.
pub fn chebyshev_u(n: i64) -> Result<Polynomial> {
    if n < -1 {
        return Err(Error::ChebyshevIndex(n));
    }
    Ok(sequence((n + 1) as usize).swap_remove((n + 1) as usize))
}

/// `U_n(1 - 2x)` as a polynomial in `x`.
pub fn shifted_poly(n: i64) -> Result<Polynomial> {
    Ok(chebyshev_u(n)?.compose(&Polynomial::from_i64(&[1, -2])))
}

/// `U_n(1 - 2T)` as an element of the coefficient ring.
pub fn chebyshev_shifted(n: i64) -> Result<RingElem> {
    Ok(RingElem::from_poly_in(Atom::T, &shifted_poly(n)?))
}

/// Coordinates of `p` on the basis `U_0(1-2x), U_1(1-2x), ...`.
///
/// `U_k(1-2x)` has degree exactly `k` with leading coefficient `(-4)^k`, so
/// the change of basis is triangular and solved top-down.
pub fn shifted_coordinates(p: &Polynomial) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let basis: Vec<Polynomial> = sequence(deg)
        .into_iter()
        .skip(1)
        .map(|u| u.compose(&Polynomial::from_i64(&[1, -2])))
        .collect();
    let mut rest = p.clone();
    let mut coords = vec![Rational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rest.coeff(k) / basis[k].leading().unwrap();
        if !c.is_zero() {
            rest = &rest - &basis[k].scale(&c);
        }
        coords[k] = c;
    }
    debug_assert!(rest.is_zero());
    coords
}

/// Value of `U_n(1)`, which is `n + 1`.
pub fn value_at_one(n: i64) -> Result<Rational> {
    Ok(chebyshev_u(n)?.eval(&rat(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_indices() {
        assert_eq!(chebyshev_u(2).unwrap(), Polynomial::from_i64(&[-1, 0, 4]));
        assert_eq!(
            chebyshev_u(5).unwrap(),
            Polynomial::from_i64(&[0, 6, 0, -32, 0, 32])
        );
        assert!(chebyshev_u(-1).unwrap().is_zero());
        assert_eq!(chebyshev_u(0).unwrap(), Polynomial::one());
        assert!(matches!(chebyshev_u(-2), Err(Error::ChebyshevIndex(-2))));
        assert!(chebyshev_shifted(-5).is_err());
    }

    #[test]
    fn shifted_values() {
        assert_eq!(chebyshev_shifted(0).unwrap(), RingElem::one());
        assert_eq!(chebyshev_shifted(1).unwrap(), "2 - 4*T".parse().unwrap());
        assert_eq!(
            chebyshev_shifted(2).unwrap(),
            "3 - 16*T + 16*T^2".parse().unwrap()
        );
        assert!(chebyshev_shifted(-1).unwrap().is_zero());
    }

    #[test]
    fn coordinates_invert_expansion() {
        let p = Polynomial::from_i64(&[5, -1, 0, 7]);
        let coords = shifted_coordinates(&p);
        let mut back = Polynomial::zero();
        for (k, c) in coords.iter().enumerate() {
            back = &back + &shifted_poly(k as i64).unwrap().scale(c);
        }
        assert_eq!(back, p);
        assert!(shifted_coordinates(&Polynomial::zero()).is_empty());
    }
}
