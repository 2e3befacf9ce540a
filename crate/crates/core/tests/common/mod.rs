//! Independent oracles shared by the integration tests. Nothing here calls
//! into the algorithms it checks.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resolventlab::arith::{int, Rat, RatPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.random_range(lo..=hi)).collect()
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut d = int(1);
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return int(0);
        };
        if piv != c {
            m.swap(piv, c);
            d = -d;
        }
        let p = m[c][c].clone();
        d *= &p;
        for r in c + 1..n {
            let factor = &m[r][c] / &p;
            if factor.is_zero() {
                continue;
            }
            let pivot_row = m[c].clone();
            for (x, y) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                *x -= &factor * y;
            }
        }
    }
    d
}

/// Resultant as the Sylvester determinant.
pub fn sylvester_resultant(a: &RatPoly, b: &RatPoly) -> Rat {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return int(1);
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![int(0); size];
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![int(0); size];
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

/// `(-1)^(n(n-1)/2) res(f, f') / lc(f)` with the Sylvester resultant.
pub fn sylvester_discriminant(f: &RatPoly) -> Rat {
    let n = f.degree().unwrap();
    let r = sylvester_resultant(f, &f.derivative()) / f.leading();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn sign_variations(c: &[Rat]) -> usize {
    let signs: Vec<bool> = c
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn binom_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

/// Coefficients of `(1 + x)^n f((a + b x) / (1 + x))`: positive roots of it
/// correspond to roots of `f` in `(a, b)`.
fn moebius(f: &RatPoly, a: &Rat, b: &Rat) -> Vec<Rat> {
    let n = f.degree().unwrap();
    let mut out = vec![int(0); n + 1];
    for (k, c) in f.coeffs().iter().enumerate() {
        // c (a + b x)^k (1 + x)^(n - k)
        let bk = binom_row(k);
        let bnk = binom_row(n - k);
        let mut p1 = vec![int(0); k + 1];
        for (i, coef) in bk.iter().enumerate() {
            p1[i] = Rat::from_integer(coef.clone())
                * num_traits::pow(a.clone(), k - i)
                * num_traits::pow(b.clone(), i);
        }
        for (i, x) in p1.iter().enumerate() {
            for (j, y) in bnk.iter().enumerate() {
                out[i + j] += c * x * Rat::from_integer(y.clone());
            }
        }
    }
    out
}

/// Real roots of the squarefree `f` in the open interval `(a, b)`, by
/// Descartes' rule of signs and bisection.
pub fn descartes_count(f: &RatPoly, a: &Rat, b: &Rat) -> usize {
    let v = sign_variations(&moebius(f, a, b));
    if v <= 1 {
        return v;
    }
    let m = (a + b) / int(2);
    let at_mid = usize::from(f.eval(&m).is_zero());
    descartes_count(f, a, &m) + at_mid + descartes_count(f, &m, b)
}

pub fn descartes_real_roots(f: &RatPoly) -> usize {
    let lc = f.leading();
    let bound = f
        .coeffs()
        .iter()
        .map(|c| (c / &lc).abs())
        .fold(int(0), |m, v| if v > m { v } else { m })
        + int(2);
    descartes_count(f, &-bound.clone(), &bound)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion, odd prime `p < 2^32`.
pub fn legendre(a: u64, p: u64) -> i64 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n)
        .filter(|d| n % d == 0)
        .flat_map(|d| [d, -d])
        .collect()
}

fn eval_int(c: &[i64], x: i64) -> i64 {
    c.iter().rev().fold(0, |acc, a| acc * x + a)
}

/// Does the integer polynomial `g` (constant first) divide `f` over `Q`?
fn divides(g: &[Rat], f: &[i64]) -> bool {
    let fp = RatPoly::from_ints(f);
    let gp = RatPoly::new(g.to_vec());
    gp.degree().is_some_and(|d| d > 0) && fp.rem(&gp).unwrap().is_zero()
}

/// Irreducibility over `Q` for `1 <= deg f <= 4` by Kronecker's method: a
/// factor of degree 1 or 2 is pinned down by its values at `0, 1, -1`.
pub fn kronecker_irreducible(f: &[i64]) -> bool {
    let mut f = f.to_vec();
    while f.last() == Some(&0) {
        f.pop();
    }
    let n = f.len() - 1;
    assert!((1..=4).contains(&n));
    if n == 1 {
        return true;
    }
    let pts = [0i64, 1, -1];
    let vals: Vec<i64> = pts.iter().map(|&x| eval_int(&f, x)).collect();
    if vals.contains(&0) {
        return false;
    }
    // linear factors u x + v
    for a in divisors(vals[0]) {
        for b in divisors(vals[1]) {
            // g(0) = a, g(1) = b
            let g = vec![int(a), int(b - a)];
            if divides(&g, &f) {
                return false;
            }
        }
    }
    if n < 4 {
        return true;
    }
    // quadratic factors through (0, a), (1, b), (-1, c)
    for a in divisors(vals[0]) {
        for b in divisors(vals[1]) {
            for c in divisors(vals[2]) {
                let a2 = Rat::new(BigInt::from(b + c - 2 * a), BigInt::from(2));
                let a1 = Rat::new(BigInt::from(b - c), BigInt::from(2));
                if a2.is_zero() {
                    continue;
                }
                if divides(&[int(a), a1, a2], &f) {
                    return false;
                }
            }
        }
    }
    true
}
