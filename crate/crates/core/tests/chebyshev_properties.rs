mod common;

use num_traits::Zero;
use tetrahedron::chebyshev::{chebyshev_shifted, chebyshev_u, shifted_coordinates, shifted_poly};
use tetrahedron::poly::Polynomial;
use tetrahedron::rational::{rat, Rational};

fn binomial(n: i64, k: i64) -> Rational {
    (0..k).fold(rat(1), |acc, i| acc * rat(n - i) / rat(i + 1))
}

/// `U_n(x) = Σ_k (-1)^k C(n-k, k) (2x)^(n-2k)`.
fn explicit(n: i64) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); (n + 1) as usize];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let two_pow = (0..n - 2 * k).fold(rat(1), |acc, _| acc * rat(2));
        coeffs[(n - 2 * k) as usize] = sign * binomial(n - k, k) * two_pow;
    }
    Polynomial::from_coeffs(coeffs)
}

#[test]
fn recurrence_through_forty() {
    let two_x = Polynomial::from_i64(&[0, 2]);
    for n in 0..40 {
        let lhs = chebyshev_u(n + 1).unwrap();
        let rhs = &(&two_x * &chebyshev_u(n).unwrap()) - &chebyshev_u(n - 1).unwrap();
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn explicit_formula_through_forty() {
    for n in 0..=40 {
        assert_eq!(chebyshev_u(n).unwrap(), explicit(n), "n = {n}");
    }
}

#[test]
fn cassini_identity() {
    for n in 0..=30 {
        let sq = &chebyshev_u(n).unwrap() * &chebyshev_u(n).unwrap();
        let prod = &chebyshev_u(n + 1).unwrap() * &chebyshev_u(n - 1).unwrap();
        assert_eq!(&sq - &prod, Polynomial::one(), "n = {n}");
    }
}

#[test]
fn shifted_family_is_graded() {
    for n in 0..=25 {
        let p = shifted_poly(n).unwrap();
        assert_eq!(p.degree(), Some(n as usize));
        let lead = (0..n).fold(rat(1), |acc, _| acc * rat(-4));
        assert_eq!(p.leading(), Some(&lead));
        // U_n(1) = n + 1 at x = 0.
        assert_eq!(p.eval(&rat(0)), rat(n + 1));
        let mut e = vec![Rational::zero(); n as usize + 1];
        e[n as usize] = rat(1);
        assert_eq!(shifted_coordinates(&p), e);
    }
}

#[test]
fn shifted_ring_elements() {
    assert!(chebyshev_shifted(-1).unwrap().is_zero());
    assert_eq!(chebyshev_shifted(1).unwrap().to_string(), "2 - 4*T");
    assert!(chebyshev_shifted(-2).is_err());
}

#[test]
fn coordinates_reconstruct_random_polynomials() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let len = rng.gen_range(0..12);
        let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
        let p = Polynomial::from_i64(&coeffs);
        let rebuilt = shifted_coordinates(&p)
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (k, c)| {
                &acc + &shifted_poly(k as i64).unwrap().scale(c)
            });
        assert_eq!(rebuilt, p);
    }
}
