//! Factorization over `Q`: a modular factorization is Hensel-lifted past the
//! Landau-Mignotte bound and true factors are recovered by subset
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor_fp::{distinct_degree, factor_mod_p};
use crate::arith::fp::primes_between;
use crate::arith::{FpPoly, Rat, RatPoly};
use crate::error::{Error, Result};

/// Largest degree accepted by [`is_irreducible_q`].
pub const MAX_IRREDUCIBILITY_DEGREE: usize = 8;

/// Primes tried for the cheap irreducibility certificate.
const QUICK_PRIME_BOUND: u64 = 200;

type IntPoly = Vec<BigInt>;

fn trim(v: &mut IntPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn reduce(v: &[BigInt], m: &BigInt) -> IntPoly {
    let mut out: IntPoly = v.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: IntPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: IntPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

/// Division by a monic `b` modulo `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (IntPoly, IntPoly) {
    let db = b.len() - 1;
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn from_fp(f: &FpPoly) -> IntPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn to_fp(f: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    FpPoly::new(
        p,
        f.iter()
            .map(|c| u64::try_from(c.mod_floor(&pb)).unwrap())
            .collect(),
    )
}

/// One quadratic Hensel step: from `f = g h mod m` with `s g + t h = 1 mod m`
/// to the same relations modulo `m^2` (`f`, `h` monic).
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = sub(f, &mul(g, h, m2), m2);
    let (q, r) = div_rem_monic(&mul(s, &e, m2), h, m2);
    let g2 = add(&add(g, &mul(t, &e, m2), m2), &mul(&q, g, m2), m2);
    let h2 = add(h, &r, m2);
    let b = sub(
        &add(&mul(s, &g2, m2), &mul(t, &h2, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = div_rem_monic(&mul(s, &b, m2), &h2, m2);
    let s2 = sub(s, &d, m2);
    let t2 = sub(&sub(t, &mul(t, &b, m2), m2), &mul(&c, &g2, m2), m2);
    (g2, h2, s2, t2)
}

/// Lifts monic `f = g0 h0 mod p` to monic `f = g h mod p^(2^k) = modulus`.
fn lift_pair(
    f: &[BigInt],
    g0: &FpPoly,
    h0: &FpPoly,
    p: u64,
    modulus: &BigInt,
) -> (IntPoly, IntPoly) {
    let (one, s0, t0) = g0.ext_gcd(h0);
    debug_assert!(one.is_one());
    let (mut g, mut h, mut s, mut t) = (from_fp(g0), from_fp(h0), from_fp(&s0), from_fp(&t0));
    let mut m = BigInt::from(p);
    while &m < modulus {
        let m2 = &m * &m;
        (g, h, s, t) = hensel_step(&reduce(f, &m2), &g, &h, &s, &t, &m2);
        m = m2;
    }
    (g, h)
}

fn lift_all(f: &[BigInt], factors: &[FpPoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![reduce(f, modulus)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[FpPoly]| fs.iter().fold(FpPoly::one(p), |acc, g| acc.mul(g));
    let (g, h) = lift_pair(
        f,
        &prod(&factors[..mid]),
        &prod(&factors[mid..]),
        p,
        modulus,
    );
    let mut out = lift_all(&g, &factors[..mid], p, modulus);
    out.extend(lift_all(&h, &factors[mid..], p, modulus));
    out
}

/// Multifactor Hensel lifting of `f = lc(f) * prod factors (mod p)` to monic
/// factors modulo `p^(2^k) >= target`. Returns the factors and the modulus.
pub fn hensel_lift(
    f: &[BigInt],
    factors: &[FpPoly],
    p: u64,
    target: &BigInt,
) -> (Vec<IntPoly>, BigInt) {
    let mut modulus = BigInt::from(p);
    while &modulus < target {
        modulus = &modulus * &modulus;
    }
    let lc = f.last().unwrap();
    let inv = lc
        .modinv(&modulus)
        .expect("leading coefficient is a unit at a good prime");
    let monic: IntPoly = f.iter().map(|c| c * &inv).collect();
    (
        lift_all(&reduce(&monic, &modulus), factors, p, &modulus),
        modulus,
    )
}

fn symmetric(v: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m >> 1;
    let mut out: IntPoly = v
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn primitive(v: &[BigInt]) -> IntPoly {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let g = if v.last().is_some_and(|c| c.is_negative()) {
        -g
    } else {
        g
    };
    v.iter().map(|c| c / &g).collect()
}

/// Exact quotient `a / b` over `Z`, if `b` divides `a`.
fn int_divide(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let (a0, b0) = (&a[0], &b[0]);
    if !b0.is_zero() && !(a0 % b0).is_zero() {
        return None;
    }
    if !(a.last().unwrap() % b.last().unwrap()).is_zero() {
        return None;
    }
    let (q, r) = RatPoly::from_bigints(a)
        .div_rem(&RatPoly::from_bigints(b))
        .ok()?;
    if !r.is_zero() || !q.is_integral() {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// Landau-Mignotte style bound on the coefficients of `lc(f) * g / lc(g)`
/// for any factor `g` of `f`.
pub fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    (BigInt::one() << n) * norm2 * f.last().unwrap().abs()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Good primes: `p` does not divide `lc(f)` and `f mod p` is squarefree.
fn good_primes(f: &[BigInt], bound: u64) -> impl Iterator<Item = (u64, FpPoly)> + '_ {
    primes_between(2, bound).into_iter().filter_map(move |p| {
        let fp = to_fp(f, p);
        (fp.degree() == Some(f.len() - 1) && fp.is_squarefree()).then_some((p, fp))
    })
}

/// Irreducible factors of a squarefree primitive integer polynomial.
fn factor_squarefree_int(f: &[BigInt], seed: u64) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // pick the good prime with the fewest modular factors among the first few
    let mut best: Option<(usize, u64, FpPoly)> = None;
    for (p, fp) in good_primes(f, 10_000).take(6) {
        let count: usize = distinct_degree(&fp.monic())
            .iter()
            .map(|(g, d)| g.degree().unwrap() / d)
            .sum();
        if count == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|b| count < b.0) {
            best = Some((count, p, fp));
        }
    }
    let (_, p, fp) = best.expect("a squarefree polynomial has good primes");
    let modular: Vec<FpPoly> = factor_mod_p(&fp, seed)
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    let target = coefficient_bound(f) * 2 + 1;
    let (mut lifted, modulus) = hensel_lift(f, &modular, p, &target);

    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut k = 1;
    'outer: while 2 * k <= lifted.len() {
        for subset in combinations(lifted.len(), k) {
            let lc = rest.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| mul(&acc, &lifted[i], &modulus));
            let cand = primitive(&symmetric(&prod, &modulus));
            if cand.len() < 2 {
                continue;
            }
            if let Some(q) = int_divide(&rest, &cand) {
                found.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        k += 1;
    }
    found.push(primitive(&rest));
    found
}

/// Squarefree decomposition over `Q` (Yun): pairs `(a_i, i)` with
/// `f = c * prod a_i^i`.
fn squarefree_q(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    let d = f.derivative();
    let mut a = f.gcd(&d);
    if a.degree() == Some(0) {
        return vec![(f.monic(), 1)];
    }
    let mut b = f.div_rem(&a).unwrap().0;
    let mut c = d.div_rem(&a).unwrap().0;
    let mut i = 1;
    loop {
        let e = &c - &b.derivative();
        if b.degree() == Some(0) {
            break;
        }
        a = b.gcd(&e);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).unwrap().0;
        c = e.div_rem(&a).unwrap().0;
        i += 1;
    }
    out
}

/// Irreducible factors over `Q` as primitive integer polynomials with
/// positive leading coefficient, with multiplicities. Constant factors are
/// dropped.
pub fn factor_q(f: &RatPoly, seed: u64) -> Result<Vec<(RatPoly, usize)>> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::ConstantPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_q(f) {
        let ints = part.primitive_integer();
        for g in factor_squarefree_int(&ints, seed) {
            out.push((RatPoly::from_bigints(&g), mult));
        }
    }
    out.sort_by(|a, b| (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1)));
    Ok(out)
}

/// Irreducibility over `Q` for `1 <= deg f <= 8`.
///
/// A good prime `p < 200` at which `f` stays irreducible settles it; otherwise
/// the full factorization decides.
pub fn is_irreducible_q(f: &RatPoly) -> Result<bool> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n > MAX_IRREDUCIBILITY_DEGREE {
        return Err(Error::DegreeOutOfScope(n, MAX_IRREDUCIBILITY_DEGREE));
    }
    if n == 1 {
        return Ok(true);
    }
    if !f.is_squarefree() {
        return Ok(false);
    }
    let ints = f.primitive_integer();
    for (_, fp) in good_primes(&ints, QUICK_PRIME_BOUND) {
        let ddf = distinct_degree(&fp.monic());
        if ddf.len() == 1 && ddf[0].1 == n {
            return Ok(true);
        }
    }
    Ok(factor_q(f, 0)?.len() == 1)
}

/// All rational roots, in increasing order.
pub fn rational_roots(f: &RatPoly) -> Result<Vec<Rat>> {
    let mut roots: Vec<Rat> = factor_q(f, 0)?
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| -g.coeff(0) / g.coeff(1))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Whether `f` has a rational root. A good prime at which `f` has no root
/// settles the question without factoring.
pub fn has_rational_root(f: &RatPoly) -> Result<bool> {
    match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(1) => return Ok(true),
        _ => {}
    }
    if f.coeff(0).is_zero() {
        return Ok(true);
    }
    let ints = f.primitive_integer();
    for (p, fp) in good_primes(&ints, QUICK_PRIME_BOUND).take(12) {
        let m = fp.monic();
        let xp = FpPoly::x(p).pow_mod(p, &m);
        if xp.sub(&FpPoly::x(p)).gcd(&m).degree() == Some(0) {
            return Ok(false);
        }
    }
    Ok(!rational_roots(f)?.is_empty())
}
