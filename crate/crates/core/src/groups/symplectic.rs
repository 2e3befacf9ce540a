//! The four-dimensional symplectic space `W = V/U` over `F2` and the action
//! of `S6` on it.
//!
//! `V` is the even-weight subspace of `F2^6` and `U` is spanned by the
//! all-ones vector. Vectors of `F2^6` are bitmasks: bit `k` is coordinate
//! `k + 1`. Elements of `W` are written in the basis
//!
//! ```text
//! e1 = (1,1,0,0,0,0)  e2 = (0,0,0,1,1,0)  e3 = (0,0,0,1,0,1)  e4 = (1,0,1,0,0,0)
//! ```

use std::fmt;
use std::sync::OnceLock;

use super::perm::Perm6;

pub const ALL_ONES: u8 = 0b11_1111;

/// Lifts of the basis vectors `e1..e4`.
pub const BASIS: [u8; 4] = [0b00_0011, 0b01_1000, 0b10_1000, 0b00_0101];

/// Dot product on `F2^6`.
pub fn dot6(x: u8, y: u8) -> u8 {
    ((x & y).count_ones() & 1) as u8
}

/// Canonical representative of the class `v + U`: the one with first bit 0.
pub fn canonical(v: u8) -> u8 {
    if v & 1 == 1 {
        v ^ ALL_ONES
    } else {
        v
    }
}

/// Permutation action on `F2^6`: coordinate `i` moves to slot `g(i)`.
pub fn permute6(g: &Perm6, v: u8) -> u8 {
    (0..6)
        .filter(|&i| v >> i & 1 == 1)
        .fold(0u8, |acc, i| acc | 1 << g.apply(i))
}

/// Element of `W` in coordinates w.r.t. `e1..e4` (bit `j` is the `e(j+1)` coordinate).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WVec(u8);

fn reduce_table() -> &'static [Option<u8>; 64] {
    static TABLE: OnceLock<[Option<u8>; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [None; 64];
        for c in 0u8..16 {
            t[WVec(c).lift() as usize] = Some(c);
        }
        t
    })
}

impl WVec {
    pub fn new(coords: u8) -> Self {
        WVec(coords & 0xf)
    }

    pub fn coords(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = WVec> {
        (0..16).map(WVec)
    }

    pub fn basis(j: usize) -> Self {
        WVec(1 << j)
    }

    /// Canonical lift to `V`.
    pub fn lift(self) -> u8 {
        let v = (0..4)
            .filter(|&j| self.0 >> j & 1 == 1)
            .fold(0u8, |acc, j| acc ^ BASIS[j]);
        canonical(v)
    }

    /// Class of `v in V`; `None` when `v` has odd weight.
    pub fn reduce(v: u8) -> Option<Self> {
        if v.count_ones() % 2 == 1 {
            return None;
        }
        reduce_table()[canonical(v & ALL_ONES) as usize].map(WVec)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: Self) -> Self {
        WVec(self.0 ^ o.0)
    }
}

/// The pairing induced on `W` by the dot product of lifts.
pub fn pairing_w(u: WVec, v: WVec) -> u8 {
    dot6(u.lift(), v.lift())
}

/// 4x4 matrix over `F2`; row `i` is a nibble, bit `j` is entry `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4F2 {
    rows: [u8; 4],
}

impl Mat4F2 {
    pub fn from_rows(rows: [u8; 4]) -> Self {
        Mat4F2 {
            rows: rows.map(|r| r & 0xf),
        }
    }

    /// Entries as 16 bits, row-major (bit `4i + j` is entry `(i, j)`).
    pub fn from_bits(bits: u16) -> Self {
        Mat4F2 {
            rows: [0, 1, 2, 3].map(|i| (bits >> (4 * i) & 0xf) as u8),
        }
    }

    pub fn from_columns(cols: [u8; 4]) -> Self {
        let mut rows = [0u8; 4];
        for (j, c) in cols.iter().enumerate() {
            for (i, r) in rows.iter_mut().enumerate() {
                *r |= (c >> i & 1) << j;
            }
        }
        Mat4F2 { rows }
    }

    pub fn identity() -> Self {
        Self::from_rows([1, 2, 4, 8])
    }

    pub fn rows(&self) -> [u8; 4] {
        self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.rows[i] >> j & 1
    }

    pub fn column(&self, j: usize) -> u8 {
        (0..4).fold(0, |acc, i| acc | self.entry(i, j) << i)
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(self.rows)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut rows = [0u8; 4];
        for (i, r) in rows.iter_mut().enumerate() {
            // row i of the product is the xor of rows of `o` selected by row i of self
            for k in 0..4 {
                if self.entry(i, k) == 1 {
                    *r ^= o.rows[k];
                }
            }
        }
        Mat4F2 { rows }
    }

    pub fn apply(&self, v: WVec) -> WVec {
        let c = (0..4).fold(0u8, |acc, i| {
            acc | (((self.rows[i] & v.coords()).count_ones() & 1) as u8) << i
        });
        WVec::new(c)
    }

    pub fn trace(&self) -> u8 {
        (0..4).fold(0, |acc, i| acc ^ self.entry(i, i))
    }

    pub fn is_invertible(&self) -> bool {
        // Gaussian elimination on a copy
        let mut m = self.rows;
        let mut rank = 0;
        for col in 0..4 {
            let Some(piv) = (rank..4).find(|&r| m[r] >> col & 1 == 1) else {
                continue;
            };
            m.swap(rank, piv);
            for r in 0..4 {
                if r != rank && m[r] >> col & 1 == 1 {
                    m[r] ^= m[rank];
                }
            }
            rank += 1;
        }
        rank == 4
    }

    /// `X^t J X = J`.
    pub fn preserves(&self, j: &Mat4F2) -> bool {
        self.transpose().mul(j).mul(self) == *j
    }
}

impl fmt::Debug for Mat4F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..4 {
                write!(f, "{}", r >> j & 1)?;
            }
        }
        write!(f, "]")
    }
}

/// Gram matrix of the pairing on `W` in the basis `e1..e4`.
pub fn gram_matrix() -> Mat4F2 {
    let mut rows = [0u8; 4];
    for (i, r) in rows.iter_mut().enumerate() {
        for j in 0..4 {
            *r |= pairing_w(WVec::basis(i), WVec::basis(j)) << j;
        }
    }
    Mat4F2 { rows }
}

/// `[[0, s], [-s, 0]]` with `s = [[0, 1], [1, 0]]`, reduced mod 2.
pub fn standard_form() -> Mat4F2 {
    Mat4F2::from_rows([0b1000, 0b0100, 0b0010, 0b0001])
}

/// An invertible `P` with `P^t G P = J_std`, where `G` is [`gram_matrix`].
///
/// Conjugating by `P` carries the group fixed by `G` onto the group fixed by
/// the standard form. The identity is tried first.
pub fn basis_change_to_standard() -> Mat4F2 {
    let g = gram_matrix();
    let j = standard_form();
    std::iter::once(Mat4F2::identity())
        .chain((0..=u16::MAX).map(Mat4F2::from_bits))
        .find(|p| p.is_invertible() && p.transpose().mul(&g).mul(p) == j)
        .expect("any two nondegenerate alternating forms are congruent")
}

/// A matrix preserving the pairing on `W` (`X^t J X = J`, `nu = 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SpMat4(Mat4F2);

impl SpMat4 {
    pub fn new(m: Mat4F2) -> Option<Self> {
        m.preserves(&gram_matrix()).then_some(SpMat4(m))
    }

    pub fn matrix(&self) -> &Mat4F2 {
        &self.0
    }

    pub fn trace(&self) -> u8 {
        self.0.trace()
    }

    pub fn mul(&self, o: &Self) -> Self {
        SpMat4(self.0.mul(&o.0))
    }
}

/// Matrix of the action of `g` on `W` in the basis `e1..e4`.
pub fn phi(g: &Perm6) -> SpMat4 {
    let cols = [0, 1, 2, 3].map(|j| {
        let image = permute6(g, BASIS[j]);
        WVec::reduce(image).expect("S6 preserves V").coords()
    });
    SpMat4::new(Mat4F2::from_columns(cols)).expect("S6 preserves the pairing")
}

/// Every `X` in `GL4(F2)` with `X^t J X = J` for the Gram matrix `J`.
pub fn symplectic_solutions() -> Vec<Mat4F2> {
    let j = gram_matrix();
    (0..=u16::MAX)
        .map(Mat4F2::from_bits)
        .filter(|m| m.preserves(&j))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub image_size: usize,
    pub solution_count: usize,
    pub injective: bool,
    pub image_equals_solutions: bool,
}

/// Enumerates `phi(S6)` and the solutions of `X^t J X = J` and compares them.
pub fn gsp4_order_check() -> OrderCheck {
    use std::collections::BTreeSet;
    let images: Vec<Mat4F2> = Perm6::all().iter().map(|g| *phi(g).matrix()).collect();
    let image_set: BTreeSet<_> = images.iter().copied().collect();
    let sols: BTreeSet<_> = symplectic_solutions().into_iter().collect();
    OrderCheck {
        image_size: image_set.len(),
        solution_count: sols.len(),
        injective: image_set.len() == images.len(),
        image_equals_solutions: image_set == sols,
    }
}
