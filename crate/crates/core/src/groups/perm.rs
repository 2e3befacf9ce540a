use std::fmt;

use serde::Serialize;

/// Permutation of `{1, ..., N}`, stored 0-based.
///
/// Composition follows functions: `(g * h)(i) = g(h(i))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm<const N: usize> {
    images: [u8; N],
}

pub type Perm6 = Perm<6>;
pub type Perm5 = Perm<5>;

impl<const N: usize> Perm<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, v) in images.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm { images }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: [u8; N]) -> Option<Self> {
        let mut seen = [false; N];
        for &v in &images {
            let v = v as usize;
            if v >= N || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { images })
    }

    /// From 1-based cycles, e.g. `&[&[1, 2], &[3, 4, 5]]`.
    pub fn from_cycles(cycles: &[&[usize]]) -> Option<Self> {
        let mut images = Self::identity().images;
        let mut touched = [false; N];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || a > N || b == 0 || b > N || touched[a - 1] {
                    return None;
                }
                touched[a - 1] = true;
                images[a - 1] = (b - 1) as u8;
            }
        }
        Self::from_images(images)
    }

    pub fn images(&self) -> [u8; N] {
        self.images
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn compose(&self, h: &Self) -> Self {
        let mut images = [0u8; N];
        for (i, v) in images.iter_mut().enumerate() {
            *v = self.images[h.images[i] as usize];
        }
        Perm { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; N];
        let mut out = Vec::new();
        for s in 0..N {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn fixed_points(&self) -> usize {
        (0..N).filter(|&i| self.images[i] as usize == i).count()
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// All `N!` permutations in lexicographic order of their image arrays.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Self::identity().images;
        loop {
            out.push(Perm { images: cur });
            // next lexicographic permutation
            let Some(i) = (0..N.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..N).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl<const N: usize> fmt::Display for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; N];
        let mut any = false;
        for s in 0..N {
            if seen[s] || self.images[s] as usize == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{N}{self}")
    }
}

impl<const N: usize> Serialize for Perm<N> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Whether `h` acts transitively on the `N` points.
pub fn is_transitive<const N: usize>(h: &[Perm<N>]) -> bool {
    let mut orbit = [false; N];
    orbit[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for g in h {
            let j = g.apply(i);
            if !orbit[j] {
                orbit[j] = true;
                stack.push(j);
            }
        }
    }
    orbit.iter().all(|&b| b)
}

/// Closure test: nonempty, contains identity, closed under composition.
pub fn is_subgroup<const N: usize>(h: &[Perm<N>]) -> bool {
    use std::collections::HashSet;
    let set: HashSet<_> = h.iter().copied().collect();
    !h.is_empty()
        && set.contains(&Perm::identity())
        && h.iter()
            .all(|a| h.iter().all(|b| set.contains(&a.compose(b))))
}

/// Size of the conjugacy class of `g` inside the group `h`.
pub fn class_size_in<const N: usize>(g: &Perm<N>, h: &[Perm<N>]) -> usize {
    use std::collections::HashSet;
    h.iter()
        .map(|x| x.compose(g).compose(&x.inverse()))
        .collect::<HashSet<_>>()
        .len()
}
