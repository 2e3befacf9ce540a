//! Hermite's family `x^5 + s x^3 + t x + t` and the `(s, t)`-plane picture of
//! which members have exactly one real root.

use std::io::Write;
use std::sync::OnceLock;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::rat::sign;
use crate::arith::{discriminant, fmt_rat, int, Rat, RatPoly};
use crate::error::{Error, Result};
use crate::galois::quintic::quintic_galois;
pub use crate::galois::quintic::{hermite_quintic, weber_resolvent};
use crate::roots::{condition2_holds, count_real_roots};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteParams {
    pub s: Rat,
    pub t: Rat,
}

impl HermiteParams {
    pub fn new(s: Rat, t: Rat) -> Self {
        HermiteParams { s, t }
    }

    pub fn from_ints(s: i64, t: i64) -> Self {
        HermiteParams::new(int(s), int(t))
    }

    pub fn quintic(&self) -> RatPoly {
        hermite_quintic(&self.s, &self.t)
    }

    pub fn resolvent(&self) -> Result<RatPoly> {
        weber_resolvent(&self.s, &self.t)
    }
}

/// `108 s^5 + 16 s^4 t - 900 s^3 t - 128 s^2 t^2 + 2000 s t^2 + 256 t^3 + 3125 t^2`,
/// which equals `disc(x^5 + s x^3 + t x + t) / t^2`.
pub fn lower_st(s: &Rat, t: &Rat) -> Rat {
    let s2 = s * s;
    let s3 = &s2 * s;
    let t2 = t * t;
    int(108) * &s3 * &s2 + int(16) * &s2 * &s2 * t - int(900) * &s3 * t - int(128) * &s2 * &t2
        + int(2000) * s * &t2
        + int(256) * &t2 * t
        + int(3125) * &t2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Quadrant {
    First,
    Second,
    Third,
    Fourth,
    Axis,
}

impl Quadrant {
    pub fn of(s: &Rat, t: &Rat) -> Self {
        match (sign(s), sign(t)) {
            (1, 1) => Quadrant::First,
            (-1, 1) => Quadrant::Second,
            (-1, -1) => Quadrant::Third,
            (1, -1) => Quadrant::Fourth,
            _ => Quadrant::Axis,
        }
    }
}

/// Condition (2) for the quintic: exactly one real root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SturmClass {
    Blue,
    Red,
    /// Zero discriminant; the root count is not a conjugation type.
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sign(pub i8);

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self.0 {
            1 => "+",
            -1 => "-",
            _ => "0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionClass {
    pub quadrant: Quadrant,
    pub lower_st: String,
    pub lower_st_sign: Sign,
    /// Sign of `9 s^2 - 20 t`, the discriminant of `h'` as a quadratic in
    /// `x^2`; second quadrant only.
    pub parabola_9s2_sign: Option<Sign>,
    /// Sign of `s^2 - 20 t`, the same discriminant if `h'` were
    /// `5 x^4 + s x^2 + t`; second quadrant only.
    pub parabola_s2_sign: Option<Sign>,
    /// Distinct real zeros of `h' = 5 x^4 + 3 s x^2 + t`.
    pub derivative_real_zeros: usize,
    pub real_roots: Option<usize>,
    pub sturm_class: SturmClass,
}

fn squarefree_part(f: &RatPoly) -> RatPoly {
    f.div_rem(&f.gcd(&f.derivative()))
        .expect("gcd is nonzero")
        .0
}

fn distinct_real_zeros(f: &RatPoly) -> usize {
    if f.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    count_real_roots(&squarefree_part(f), None).expect("squarefree part")
}

/// Condition-(2) class of the quintic, decided by Sturm sequences.
pub fn sturm_class(p: &HermiteParams) -> SturmClass {
    let h = p.quintic();
    if !h.is_squarefree() {
        return SturmClass::Degenerate;
    }
    match condition2_holds(&h) {
        Ok(true) => SturmClass::Blue,
        _ => SturmClass::Red,
    }
}

pub fn region_classify(p: &HermiteParams) -> RegionClass {
    let (s, t) = (&p.s, &p.t);
    let quadrant = Quadrant::of(s, t);
    let l = lower_st(s, t);
    let second = quadrant == Quadrant::Second;
    let nine = int(9) * s * s - int(20) * t;
    let one = s * s - int(20) * t;
    let h = p.quintic();
    RegionClass {
        quadrant,
        lower_st: fmt_rat(&l),
        lower_st_sign: Sign(sign(&l)),
        parabola_9s2_sign: second.then(|| Sign(sign(&nine))),
        parabola_s2_sign: second.then(|| Sign(sign(&one))),
        derivative_real_zeros: distinct_real_zeros(&h.derivative()),
        real_roots: h.is_squarefree().then(|| distinct_real_zeros(&h)),
        sturm_class: sturm_class(p),
    }
}

/// Which sign of [`lower_st`] goes with `Blue` for `t < 0`, read off the
/// witness `(0, -1)` instead of being assumed.
pub fn lower_half_blue_sign() -> i8 {
    static ORIENT: OnceLock<i8> = OnceLock::new();
    *ORIENT.get_or_init(|| {
        let w = HermiteParams::from_ints(0, -1);
        let sg = sign(&lower_st(&w.s, &w.t));
        match sturm_class(&w) {
            SturmClass::Blue => sg,
            _ => -sg,
        }
    })
}

/// Class predicted from the sign of [`lower_st`], for `t < 0` off the curve.
pub fn lower_half_prediction(p: &HermiteParams) -> Option<SturmClass> {
    let l = sign(&lower_st(&p.s, &p.t));
    if sign(&p.t) >= 0 || l == 0 {
        return None;
    }
    Some(if l == lower_half_blue_sign() {
        SturmClass::Blue
    } else {
        SturmClass::Red
    })
}

/// Short summary of condition (1) for the quintic.
pub fn condition1_verdict(p: &HermiteParams) -> String {
    let h = p.quintic();
    if discriminant(&h).map_or(true, |d| d.is_zero()) {
        return "degenerate".into();
    }
    match quintic_galois(&h) {
        Ok(g) if g.is_s5 => "S5".into(),
        Ok(g) if !g.irreducible => "reducible".into(),
        Ok(g) if !g.resolvent_rational_roots.is_empty() => "solvable".into(),
        Ok(_) => "A5".into(),
        Err(e) => format!("error: {e}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub s0: Rat,
    pub s1: Rat,
    pub t0: Rat,
    pub t1: Rat,
}

impl Rect {
    pub fn new(s0: Rat, s1: Rat, t0: Rat, t1: Rat) -> Self {
        Rect { s0, s1, t0, t1 }
    }

    pub fn from_ints(s0: i64, s1: i64, t0: i64, t1: i64) -> Self {
        Rect::new(int(s0), int(s1), int(t0), int(t1))
    }
}

/// Grid spacing of [`grid_sample`].
pub const GRID_DENOMINATOR: i64 = 1000;

/// Integer numerators `k` with `lo < k / 1000 < hi`.
fn open_range(lo: &Rat, hi: &Rat) -> Result<(i64, i64)> {
    let d = int(GRID_DENOMINATOR);
    let a = (lo * &d).floor().to_integer() + 1;
    let b = (hi * &d).ceil().to_integer() - 1;
    if a > b {
        return Err(Error::EmptyRectangle);
    }
    let conv = |x: num_bigint::BigInt| i64::try_from(x).map_err(|_| Error::EmptyRectangle);
    Ok((conv(a)?, conv(b)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridRow {
    pub s: String,
    pub t: String,
    pub quadrant: Quadrant,
    pub lower_st_sign: Sign,
    pub sturm_class: SturmClass,
    pub condition1_verdict: String,
}

/// `n` seeded uniform points of the open rectangle on the `1/1000` grid.
pub fn sample_points(rect: &Rect, n: usize, seed: u64) -> Result<Vec<HermiteParams>> {
    let (sa, sb) = open_range(&rect.s0, &rect.s1)?;
    let (ta, tb) = open_range(&rect.t0, &rect.t1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let s = rng.random_range(sa..=sb);
            let t = rng.random_range(ta..=tb);
            HermiteParams::new(rat(s), rat(t))
        })
        .collect())
}

fn rat(k: i64) -> Rat {
    crate::arith::rat(k, GRID_DENOMINATOR)
}

/// Classifies `n` sampled points; rows come back in sampling order.
pub fn grid_sample(rect: &Rect, n: usize, seed: u64) -> Result<Vec<GridRow>> {
    let points = sample_points(rect, n, seed)?;
    Ok(points
        .par_iter()
        .map(|p| {
            let r = region_classify(p);
            GridRow {
                s: fmt_rat(&p.s),
                t: fmt_rat(&p.t),
                quadrant: r.quadrant,
                lower_st_sign: r.lower_st_sign,
                sturm_class: r.sturm_class,
                condition1_verdict: condition1_verdict(p),
            }
        })
        .collect())
}

pub fn write_grid_csv<W: Write>(rows: &[GridRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
