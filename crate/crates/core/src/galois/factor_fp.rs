//! Factorization over `F_p`: squarefree decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::FpPoly;

/// `f = unit * prod g_i^m_i` with monic irreducible `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, usize)>,
}

impl FpFactorization {
    pub fn product(&self, p: u64) -> FpPoly {
        let mut acc = FpPoly::new(p, vec![self.unit]);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    /// Factor degrees, with multiplicity, in decreasing order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap_or(0), *m))
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(h_d, d)` where `h_d` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while let Some(n) = rest.degree() {
        if n < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).unwrap().0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let n = rest.degree().unwrap();
        out.push((rest, n));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of common degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut impl Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return vec![];
    }
    if n == d {
        return vec![f.monic()];
    }
    let p = f.modulus();
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.random_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod_poly(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod_big(&e, f).sub(&FpPoly::one(p))
        };
        let g = b.gcd(f);
        if let Some(k) = g.degree() {
            if k > 0 && k < n {
                let h = f.div_rem(&g).unwrap().0;
                let mut out = equal_degree(&g, d, rng);
                out.extend(equal_degree(&h.monic(), d, rng));
                return out;
            }
        }
    }
}

/// Full factorization of a nonzero polynomial over `F_p`.
///
/// The seed drives the randomized equal-degree step; the result is sorted
/// (by degree, then coefficients) so it does not depend on the seed.
pub fn factor_mod_p(f: &FpPoly, seed: u64) -> FpFactorization {
    let p = f.modulus();
    let unit = f.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17));
    let mut factors = Vec::new();
    if f.degree().unwrap_or(0) > 0 {
        for (sqf, mult) in f.monic().squarefree_decomposition() {
            for (block, d) in distinct_degree(&sqf) {
                for g in equal_degree(&block, d, &mut rng) {
                    factors.push((g, mult));
                }
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        (a.degree(), a.coeffs(), ma).cmp(&(b.degree(), b.coeffs(), mb))
    });
    FpFactorization { unit, factors }
}

/// Rabin's irreducibility test.
pub fn is_irreducible_fp(g: &FpPoly) -> bool {
    let Some(n) = g.degree() else { return false };
    if n == 0 {
        return false;
    }
    let p = g.modulus();
    let x = FpPoly::x(p);
    let g = g.monic();
    let pow_x = |k: usize| {
        let e = BigUint::from(p).pow(k as u32);
        x.pow_mod_big(&e, &g)
    };
    if !pow_x(n).sub(&x).rem(&g).is_zero() {
        return false;
    }
    let mut m = n;
    let mut q = 2;
    while q <= m {
        if m % q == 0 {
            if !pow_x(n / q).sub(&x).gcd(&g).is_one() {
                return false;
            }
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = FpPoly::from_i64(5, &[1, 0, 1]);
        let fac = factor_mod_p(&f, 0);
        assert_eq!(
            fac.factors,
            vec![
                (FpPoly::from_i64(5, &[2, 1]), 1),
                (FpPoly::from_i64(5, &[3, 1]), 1)
            ]
        );
        let g = FpPoly::from_i64(5, &[-1, -1, 0, 0, 0, 1]);
        assert_eq!(factor_mod_p(&g, 0).degrees(), vec![5]);
        let h = FpPoly::from_i64(3, &[0, 0, 1]);
        assert_eq!(factor_mod_p(&h, 0).factors, vec![(FpPoly::x(3), 2)]);
    }

    #[test]
    fn artin_schreier_by_exhaustion() {
        // x^5 - x - 1 over F5 has no roots and no quadratic factor
        let g = FpPoly::from_i64(5, &[-1, -1, 0, 0, 0, 1]);
        assert!((0..5).all(|x| g.eval(x) != 0));
        for a in 0..5 {
            for b in 0..5 {
                let q = FpPoly::new(5, vec![b, a, 1]);
                assert!(!g.rem(&q).is_zero());
            }
        }
        assert!(is_irreducible_fp(&g));
    }

    #[test]
    fn characteristic_two() {
        // x^4 + x over F2 = x (x + 1) (x^2 + x + 1)
        let f = FpPoly::from_i64(2, &[0, 1, 0, 0, 1]);
        let fac = factor_mod_p(&f, 3);
        assert_eq!(fac.degrees(), vec![2, 1, 1]);
        assert_eq!(fac.product(2), f);
        // x^6 + x^5 + ... degree-3 pieces
        let g = FpPoly::from_i64(2, &[1, 1, 0, 1]).mul(&FpPoly::from_i64(2, &[1, 0, 1, 1]));
        let fac = factor_mod_p(&g, 9);
        assert_eq!(fac.degrees(), vec![3, 3]);
        assert_eq!(fac.product(2), g);
    }

    #[test]
    fn seed_independent_result() {
        let f = FpPoly::from_i64(7, &[3, 1, 4, 1, 5, 2, 6, 1]);
        let a = factor_mod_p(&f, 1);
        for s in 2..6 {
            assert_eq!(factor_mod_p(&f, s), a);
        }
    }
}
